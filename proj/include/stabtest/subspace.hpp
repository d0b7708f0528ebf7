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

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "stabtest/f2.hpp"
#include "stabtest/pauli.hpp"

namespace stabtest {

/// Subspace of F2^{2n} held as its reduced echelon basis.
///
/// The basis is canonical (see f2.hpp), so two subspaces are equal exactly when
/// their bases are bit-identical, and `<` orders subspaces lexicographically by
/// basis rows. Used for subgroups of Weyl labels, isotropic subspaces and
/// Lagrangians alike.
class F2Subspace {
   public:
    F2Subspace() = default;

    explicit F2Subspace(int n) : n_(n) { PauliIndex::check_n(n); }

    static F2Subspace zero(int n) { return F2Subspace(n); }

    static F2Subspace full(int n) {
        F2Subspace s(n);
        for (int j = 0; j < 2 * n; ++j) {
            f2::insert(s.basis_, Word{1} << j);
        }
        return s;
    }

    static F2Subspace span(int n, std::span<const Word> vectors) {
        F2Subspace s(n);
        for (Word v : vectors) {
            if ((v & ~f2::low_mask(2 * n)) != 0) {
                throw DimensionError("vector outside F2^" + std::to_string(2 * n));
            }
            f2::insert(s.basis_, v);
        }
        return s;
    }

    static F2Subspace span(int n, std::span<const PauliIndex> generators) {
        F2Subspace s(n);
        for (const PauliIndex &g : generators) {
            if (g.n() != n) {
                throw DimensionError("generator " + g.str() + " is not on " + std::to_string(n) + " qubits");
            }
            f2::insert(s.basis_, g.bits());
        }
        return s;
    }

    /// Span of Pauli strings in letter form; all strings must share one length.
    static F2Subspace from_strings(std::span<const std::string> letters) {
        if (letters.empty()) {
            throw ConfigurationError("subspace needs at least one generator string to fix n");
        }
        std::vector<PauliIndex> gens;
        for (const auto &s : letters) {
            gens.push_back(PauliIndex::parse(s));
        }
        return span(gens.front().n(), gens);
    }

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    std::uint64_t size() const { return std::uint64_t{1} << basis_.size(); }
    const std::vector<Word> &basis() const { return basis_; }

    std::vector<PauliIndex> generators() const {
        std::vector<PauliIndex> out;
        for (Word w : basis_) {
            out.emplace_back(n_, w);
        }
        return out;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        for (Word w : basis_) {
            out.push_back(PauliIndex(n_, w).str());
        }
        return out;
    }

    bool contains(Word v) const { return f2::reduce(basis_, v) == 0; }

    bool contains(const PauliIndex &x) const {
        PauliIndex::require_same_n(PauliIndex(n_, 0), x);
        return contains(x.bits());
    }

    bool contains(const F2Subspace &other) const {
        require_same_n(other);
        return std::all_of(other.basis_.begin(), other.basis_.end(), [this](Word w) { return contains(w); });
    }

    F2Subspace with(Word v) const {
        F2Subspace s = *this;
        f2::insert(s.basis_, v);
        return s;
    }

    F2Subspace operator+(const F2Subspace &other) const {
        require_same_n(other);
        F2Subspace s = *this;
        for (Word w : other.basis_) {
            f2::insert(s.basis_, w);
        }
        return s;
    }

    bool is_isotropic() const {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            for (std::size_t j = i + 1; j < basis_.size(); ++j) {
                if (symplectic_form(basis_[i], basis_[j], n_) != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_lagrangian() const { return dim() == n_ && is_isotropic(); }

    /// {v : form(v, s) = 0 for all s in this subspace}.
    F2Subspace symplectic_complement() const {
        std::vector<Word> constraints;
        for (Word w : basis_) {
            constraints.push_back(swap_halves(w, n_));
        }
        F2Subspace s(n_);
        s.basis_ = f2::kernel(constraints, 2 * n_);
        return s;
    }

    /// Visits every element, starting with zero.
    template <typename Visit>
    void for_each(Visit &&visit) const {
        f2::for_each_in_span(basis_, 0, std::forward<Visit>(visit));
    }

    std::vector<Word> elements() const {
        std::vector<Word> out;
        out.reserve(size());
        for_each([&](Word v) { out.push_back(v); });
        return out;
    }

    bool operator==(const F2Subspace &) const = default;

    std::strong_ordering operator<=>(const F2Subspace &other) const {
        if (auto c = n_ <=> other.n_; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(basis_.begin(), basis_.end(), other.basis_.begin(),
                                                      other.basis_.end());
    }

   private:
    void require_same_n(const F2Subspace &other) const {
        if (other.n_ != n_) {
            throw DimensionError("subspaces of F2^" + std::to_string(2 * n_) + " and F2^" +
                                 std::to_string(2 * other.n_));
        }
    }

    int n_ = 0;
    std::vector<Word> basis_;
};

inline std::string to_string(const F2Subspace &s) {
    std::string out = "<";
    auto gens = s.to_strings();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out += (i ? "," : "") + gens[i];
    }
    return out + ">";
}

inline std::ostream &operator<<(std::ostream &out, const F2Subspace &s) { return out << to_string(s); }

}  // namespace stabtest
