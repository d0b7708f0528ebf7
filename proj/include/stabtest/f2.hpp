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

// Bit-packed linear algebra over F2 for vectors of at most 64 coordinates.
//
// A vector is a single 64-bit word; coordinate j is bit j. Echelon forms put
// each row's pivot at its most significant set bit and keep rows sorted by
// strictly decreasing pivot, with every pivot column cleared in all other rows.
// That reduced form is unique per subspace, so equal spans compare equal.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stabtest::f2 {

using Word = std::uint64_t;

inline int parity(Word w) { return std::popcount(w) & 1; }

inline int pivot_of(Word w) { return 63 - std::countl_zero(w); }

inline Word low_mask(int bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

inline bool bit(Word w, int j) { return ((w >> j) & 1U) != 0; }

/// Clears every pivot column of `rows` (reduced echelon form) from `v`.
inline Word reduce(std::span<const Word> rows, Word v) {
    for (Word r : rows) {
        if (bit(v, pivot_of(r))) {
            v ^= r;
        }
    }
    return v;
}

/// Inserts `v` into a reduced echelon basis. Returns false if `v` was already in the span.
inline bool insert(std::vector<Word> &rows, Word v) {
    v = reduce(rows, v);
    if (v == 0) {
        return false;
    }
    int p = pivot_of(v);
    for (Word &r : rows) {
        if (bit(r, p)) {
            r ^= v;
        }
    }
    auto pos = std::find_if(rows.begin(), rows.end(), [p](Word r) { return pivot_of(r) < p; });
    rows.insert(pos, v);
    return true;
}

/// Reduced echelon basis of the span of `vectors`.
inline std::vector<Word> echelon(std::span<const Word> vectors) {
    std::vector<Word> rows;
    for (Word v : vectors) {
        insert(rows, v);
    }
    return rows;
}

inline std::size_t rank(std::span<const Word> vectors) { return echelon(vectors).size(); }

/// Basis (reduced echelon) of {v in F2^width : parity(v & c) = 0 for every constraint c}.
inline std::vector<Word> kernel(std::span<const Word> constraints, int width) {
    std::vector<Word> rows;
    for (Word c : constraints) {
        insert(rows, c & low_mask(width));
    }
    Word pivots = 0;
    for (Word r : rows) {
        pivots |= Word{1} << pivot_of(r);
    }
    std::vector<Word> basis;
    for (int f = 0; f < width; ++f) {
        if (bit(pivots, f)) {
            continue;
        }
        Word v = Word{1} << f;
        for (Word r : rows) {
            if (bit(r, f)) {
                v |= Word{1} << pivot_of(r);
            }
        }
        basis.push_back(v);
    }
    return echelon(basis);
}

/// One solution of parity(v & constraints[i]) = rhs[i] for all i, free variables set to zero.
/// Returns nullopt when the system is inconsistent.
inline std::optional<Word> solve(std::span<const Word> constraints, std::span<const int> rhs, int width) {
    // Row reduction on (constraint | rhs) with the rhs kept in a parallel vector.
    struct Row {
        Word lhs;
        int rhs;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        Row row{constraints[i] & low_mask(width), rhs[i] & 1};
        for (const Row &r : rows) {
            if (bit(row.lhs, pivot_of(r.lhs))) {
                row.lhs ^= r.lhs;
                row.rhs ^= r.rhs;
            }
        }
        if (row.lhs == 0) {
            if (row.rhs != 0) {
                return std::nullopt;
            }
            continue;
        }
        int p = pivot_of(row.lhs);
        for (Row &r : rows) {
            if (bit(r.lhs, p)) {
                r.lhs ^= row.lhs;
                r.rhs ^= row.rhs;
            }
        }
        rows.push_back(row);
    }
    Word v = 0;
    for (const Row &r : rows) {
        if (r.rhs != 0) {
            v |= Word{1} << pivot_of(r.lhs);
        }
    }
    return v;
}

/// Calls `visit(v)` for each of the 2^basis.size() elements of the span, in Gray-code order
/// starting from zero.
template <typename Visit>
void for_each_in_span(std::span<const Word> basis, Word offset, Visit &&visit) {
    Word v = offset;
    visit(v);
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        v ^= basis[std::countr_zero(i)];
        visit(v);
    }
}

/// Square bit matrix of dimension <= 64, stored by rows: row i bit j is entry (i, j).
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim), 0) {}
    BitMatrix(int dim, std::vector<Word> rows) : dim_(dim), rows_(std::move(rows)) {}

    static BitMatrix identity(int dim) {
        BitMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m.rows_[i] = Word{1} << i;
        }
        return m;
    }

    /// Matrix whose j-th column is cols[j].
    static BitMatrix from_columns(std::span<const Word> cols) {
        BitMatrix m(static_cast<int>(cols.size()));
        for (int j = 0; j < m.dim_; ++j) {
            for (int i = 0; i < m.dim_; ++i) {
                if (bit(cols[j], i)) {
                    m.rows_[i] |= Word{1} << j;
                }
            }
        }
        return m;
    }

    int dim() const { return dim_; }
    const std::vector<Word> &rows() const { return rows_; }
    bool get(int i, int j) const { return bit(rows_[i], j); }

    Word apply(Word v) const {
        Word out = 0;
        for (int i = 0; i < dim_; ++i) {
            out |= static_cast<Word>(parity(rows_[i] & v)) << i;
        }
        return out;
    }

    Word column(int j) const {
        Word c = 0;
        for (int i = 0; i < dim_; ++i) {
            c |= static_cast<Word>(bit(rows_[i], j)) << i;
        }
        return c;
    }

    BitMatrix transpose() const {
        BitMatrix t(dim_);
        for (int j = 0; j < dim_; ++j) {
            t.rows_[j] = column(j);
        }
        return t;
    }

    BitMatrix operator*(const BitMatrix &rhs) const {
        BitMatrix rt = rhs.transpose();
        BitMatrix out(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                out.rows_[i] |= static_cast<Word>(parity(rows_[i] & rt.rows_[j])) << j;
            }
        }
        return out;
    }

    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<BitMatrix> inverse() const {
        std::vector<Word> a = rows_;
        std::vector<Word> inv = identity(dim_).rows_;
        for (int col = 0; col < dim_; ++col) {
            int sel = -1;
            for (int r = col; r < dim_; ++r) {
                if (bit(a[r], col)) {
                    sel = r;
                    break;
                }
            }
            if (sel < 0) {
                return std::nullopt;
            }
            std::swap(a[col], a[sel]);
            std::swap(inv[col], inv[sel]);
            for (int r = 0; r < dim_; ++r) {
                if (r != col && bit(a[r], col)) {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        return BitMatrix(dim_, std::move(inv));
    }

    bool operator==(const BitMatrix &) const = default;

   private:
    int dim_ = 0;
    std::vector<Word> rows_;
};

}  // namespace stabtest::f2
