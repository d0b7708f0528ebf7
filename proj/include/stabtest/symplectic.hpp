// Copyright 2026 The stabtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabtest/f2.hpp"
#include "stabtest/pauli.hpp"
#include "stabtest/subspace.hpp"

namespace stabtest {

/// Gram matrix of the symplectic form in the packed layout: [[0, I], [I, 0]].
inline f2::BitMatrix symplectic_form_matrix(int n) {
    f2::BitMatrix j(2 * n);
    std::vector<Word> rows(2 * n);
    for (int i = 0; i < n; ++i) {
        rows[i] = Word{1} << (n + i);
        rows[n + i] = Word{1} << i;
    }
    return f2::BitMatrix(2 * n, std::move(rows));
}

/// Linear map on Weyl labels that preserves the symplectic form.
///
/// This is the action of a Clifford unitary on labels, without phases.
class SymplecticMap {
   public:
    SymplecticMap() = default;

    /// Throws InternalConsistencyError unless the matrix is invertible and symplectic.
    SymplecticMap(int n, f2::BitMatrix matrix) : n_(n), matrix_(std::move(matrix)) {
        if (matrix_.dim() != 2 * n) {
            throw DimensionError("symplectic map on n=" + std::to_string(n) + " needs a " +
                                 std::to_string(2 * n) + "x" + std::to_string(2 * n) + " matrix");
        }
        if (!preserves_form()) {
            throw InternalConsistencyError("matrix does not satisfy M^T J M = J");
        }
    }

    static SymplecticMap identity(int n) { return SymplecticMap(n, f2::BitMatrix::identity(2 * n)); }

    int n() const { return n_; }
    const f2::BitMatrix &matrix() const { return matrix_; }

    Word apply(Word v) const { return matrix_.apply(v); }

    PauliIndex apply(const PauliIndex &x) const {
        if (x.n() != n_) {
            throw DimensionError("label " + x.str() + " does not match map on " + std::to_string(n_) + " qubits");
        }
        return PauliIndex(n_, apply(x.bits()));
    }

    F2Subspace apply(const F2Subspace &s) const {
        std::vector<Word> images;
        for (Word w : s.basis()) {
            images.push_back(apply(w));
        }
        return F2Subspace::span(n_, images);
    }

    SymplecticMap inverse() const {
        auto inv = matrix_.inverse();
        if (!inv) {
            throw InternalConsistencyError("symplectic map is singular");
        }
        return SymplecticMap(n_, std::move(*inv));
    }

    /// M^T J M == J, evaluated as a matrix identity.
    bool preserves_form() const {
        auto j = symplectic_form_matrix(n_);
        return matrix_.transpose() * j * matrix_ == j;
    }

    bool operator==(const SymplecticMap &) const = default;

   private:
    int n_ = 0;
    f2::BitMatrix matrix_;
};

struct HyperbolicPair {
    PauliIndex first;   // sent to Z_i
    PauliIndex second;  // sent to X_i
};

struct GramSchmidtResult {
    std::vector<HyperbolicPair> pairs;
    std::vector<PauliIndex> residual;
    SymplecticMap map;
};

namespace detail {

// Splits `vectors` into hyperbolic pairs plus a residual that commutes with
// everything. Vectors are consumed in list order; the partner of the head is
// the first later vector that anticommutes with it.
inline void pair_up(std::vector<Word> vectors, int n, std::vector<std::pair<Word, Word>> &pairs,
                    std::vector<Word> &residual) {
    while (!vectors.empty()) {
        Word e = vectors.front();
        vectors.erase(vectors.begin());
        auto it = std::find_if(vectors.begin(), vectors.end(),
                               [&](Word w) { return symplectic_form(e, w, n) == 1; });
        if (it == vectors.end()) {
            residual.push_back(e);
            continue;
        }
        Word f = *it;
        vectors.erase(it);
        pairs.emplace_back(e, f);
        for (Word &u : vectors) {
            Word shifted = u;
            if (symplectic_form(u, f, n) != 0) {
                shifted ^= e;
            }
            if (symplectic_form(u, e, n) != 0) {
                shifted ^= f;
            }
            u = shifted;
        }
    }
}

}  // namespace detail

/// Symplectic Gram-Schmidt on V.
///
/// Produces k hyperbolic pairs and m residual vectors with 2k + m = dim V, and
/// a symplectic map U sending pair i to (Z_i, X_i) and residual j to Z_{k+j}.
/// The pairs and residuals are completed to a full symplectic basis of
/// F2^{2n} to define U; the completion uses the lowest-index free variables.
inline GramSchmidtResult symplectic_gram_schmidt(const F2Subspace &v) {
    const int n = v.n();
    std::vector<std::pair<Word, Word>> pairs;
    std::vector<Word> residual;
    detail::pair_up(v.basis(), n, pairs, residual);

    const int k = static_cast<int>(pairs.size());
    const int m = static_cast<int>(residual.size());
    if (k + m > n) {
        throw InternalConsistencyError("Gram-Schmidt produced k+m > n");
    }

    // Partners for the residual vectors.
    std::vector<Word> partners;
    for (int j = 0; j < m; ++j) {
        std::vector<Word> constraints;
        std::vector<int> rhs;
        for (auto [e, f] : pairs) {
            constraints.push_back(swap_halves(e, n));
            rhs.push_back(0);
            constraints.push_back(swap_halves(f, n));
            rhs.push_back(0);
        }
        for (int jj = 0; jj < m; ++jj) {
            constraints.push_back(swap_halves(residual[jj], n));
            rhs.push_back(jj == j ? 1 : 0);
        }
        for (Word p : partners) {
            constraints.push_back(swap_halves(p, n));
            rhs.push_back(0);
        }
        auto sol = f2::solve(constraints, rhs, 2 * n);
        if (!sol) {
            throw InternalConsistencyError("no symplectic partner for residual vector");
        }
        partners.push_back(*sol);
    }

    // Remaining qubits come from the symplectic complement of everything so far.
    std::vector<Word> used;
    for (auto [e, f] : pairs) {
        used.push_back(e);
        used.push_back(f);
    }
    for (int j = 0; j < m; ++j) {
        used.push_back(residual[j]);
        used.push_back(partners[j]);
    }
    F2Subspace rest = F2Subspace::span(n, used).symplectic_complement();
    std::vector<std::pair<Word, Word>> extra_pairs;
    std::vector<Word> extra_residual;
    detail::pair_up(rest.basis(), n, extra_pairs, extra_residual);
    if (!extra_residual.empty() || k + m + static_cast<int>(extra_pairs.size()) != n) {
        throw InternalConsistencyError("symplectic basis completion failed");
    }

    // Columns of M: M e_{Z_q} = E_q, M e_{X_q} = F_q. U = M^{-1}.
    std::vector<Word> cols(2 * n, 0);
    int q = 0;
    for (auto [e, f] : pairs) {
        cols[n + q] = e;
        cols[q] = f;
        ++q;
    }
    for (int j = 0; j < m; ++j) {
        cols[n + q] = residual[j];
        cols[q] = partners[j];
        ++q;
    }
    for (auto [e, f] : extra_pairs) {
        cols[n + q] = e;
        cols[q] = f;
        ++q;
    }
    auto inv = f2::BitMatrix::from_columns(cols).inverse();
    if (!inv) {
        throw InternalConsistencyError("symplectic basis is not a basis");
    }

    GramSchmidtResult out{{}, {}, SymplecticMap(n, std::move(*inv))};
    for (auto [e, f] : pairs) {
        out.pairs.push_back({PauliIndex(n, e), PauliIndex(n, f)});
    }
    for (Word r : residual) {
        out.residual.emplace_back(n, r);
    }
    return out;
}

/// Span of the canonical generators Z_1, X_1, ..., Z_k, X_k, Z_{k+1}, ..., Z_{k+m}.
inline F2Subspace canonical_span(int n, int k, int m) {
    std::vector<Word> gens;
    for (int q = 0; q < k; ++q) {
        gens.push_back(Word{1} << (n + q));
        gens.push_back(Word{1} << q);
    }
    for (int q = k; q < k + m; ++q) {
        gens.push_back(Word{1} << (n + q));
    }
    return F2Subspace::span(n, gens);
}

/// Deterministic Lagrangian superspace of an isotropic subspace.
///
/// Extension vectors are tried in the order Z_1..Z_n, X_1..X_n; when no single-
/// qubit label extends the current subspace, the first basis vector of its
/// symplectic complement that lies outside it is used.
inline F2Subspace complete_to_lagrangian(const F2Subspace &s) {
    if (!s.is_isotropic()) {
        throw PreconditionError("complete_to_lagrangian: subspace " + to_string(s) + " is not isotropic");
    }
    const int n = s.n();
    F2Subspace t = s;
    auto extends = [&](Word c) {
        if (t.contains(c)) {
            return false;
        }
        return std::all_of(t.basis().begin(), t.basis().end(),
                           [&](Word w) { return symplectic_form(c, w, n) == 0; });
    };
    while (t.dim() < n) {
        bool grown = false;
        for (int j = 0; j < 2 * n && !grown; ++j) {
            Word c = Word{1} << (j < n ? n + j : j - n);
            if (extends(c)) {
                t = t.with(c);
                grown = true;
            }
        }
        if (!grown) {
            const F2Subspace complement = t.symplectic_complement();
            for (Word c : complement.basis()) {
                if (!t.contains(c)) {
                    t = t.with(c);
                    grown = true;
                    break;
                }
            }
        }
        if (!grown) {
            throw InternalConsistencyError("isotropic subspace could not be extended");
        }
    }
    return t;
}

}  // namespace stabtest
