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

#include <cstdint>
#include <optional>
#include <vector>

#include "stabtest/caps.hpp"
#include "stabtest/f2.hpp"
#include "stabtest/subspace.hpp"

namespace stabtest {

/// Number of Lagrangian subspaces of F2^{2n}: prod_{k=1..n} (2^k + 1).
inline std::uint64_t lagrangian_count(int n) {
    std::uint64_t total = 1;
    for (int k = 1; k <= n; ++k) {
        total *= (std::uint64_t{1} << k) + 1;
    }
    return total;
}

/// Stream of every Lagrangian subspace of F2^{2n}, each exactly once.
///
/// Depth-first isotropic extension over reduced echelon bases. A node holds
/// rows with pivots p_1 > ... > p_d; its children append one row v whose pivot
/// q is below p_d, whose column q is zero in all existing rows, and which is
/// orthogonal to the existing rows. Appending such a v leaves the earlier rows
/// unchanged, so every Lagrangian has a single path from the root and no
/// deduplication set is needed. Children of a node are visited by decreasing
/// q, and for a fixed q in Gray-code order over the affine solution space.
class LagrangianEnumerator {
   public:
    explicit LagrangianEnumerator(int n, const ResourceCaps &caps = {}) : n_(n) {
        PauliIndex::check_n(n);
        require_cap(n, caps.enumeration, "enumerate_lagrangians");
        if (n == 0) {
            pending_zero_ = true;
            return;
        }
        stack_.push_back(Frame{{}, 2 * n_});
        advance_pivot(stack_.back());
    }

    /// Next Lagrangian, or nullopt once the stream is exhausted.
    std::optional<F2Subspace> next() {
        if (pending_zero_) {
            pending_zero_ = false;
            return F2Subspace::zero(0);
        }
        while (!stack_.empty()) {
            Frame &top = stack_.back();
            if (top.pivot < 0) {
                stack_.pop_back();
                continue;
            }
            if (top.counter >= (std::uint64_t{1} << top.free_basis.size())) {
                --top.pivot;
                advance_pivot(top);
                continue;
            }
            if (top.counter > 0) {
                top.current ^= top.free_basis[std::countr_zero(top.counter)];
            }
            ++top.counter;
            Word v = top.current;

            std::vector<Word> rows = top.rows;
            rows.push_back(v);
            if (static_cast<int>(rows.size()) == n_) {
                F2Subspace out = F2Subspace::span(n_, rows);
                return out;
            }
            int q = f2::pivot_of(v);
            Frame child{std::move(rows), q};
            advance_pivot(child);
            stack_.push_back(std::move(child));
        }
        return std::nullopt;
    }

   private:
    struct Frame {
        std::vector<Word> rows;
        int pivot;  // candidate pivot for the next row (strictly below the last row's pivot)
        std::vector<Word> free_basis{};
        Word current = 0;
        std::uint64_t counter = 0;
    };

    // Moves `frame.pivot` down to the next admissible pivot column and prepares
    // the affine solution space of rows with that pivot. Sets pivot < 0 when none remain.
    void advance_pivot(Frame &frame) const {
        const int need = n_ - static_cast<int>(frame.rows.size());
        if (frame.pivot == 2 * n_ && frame.rows.empty()) {
            frame.pivot = 2 * n_ - 1;
        } else if (frame.rows.size() > 0 && frame.pivot >= f2::pivot_of(frame.rows.back())) {
            frame.pivot = f2::pivot_of(frame.rows.back()) - 1;
        }
        for (; frame.pivot >= need - 1 && frame.pivot >= 0; --frame.pivot) {
            const int q = frame.pivot;
            bool column_free = true;
            for (Word r : frame.rows) {
                if (f2::bit(r, q)) {
                    column_free = false;
                    break;
                }
            }
            if (!column_free) {
                continue;
            }
            // v = e_q + u with u in F2^q and form(v, r) = 0 for every row r.
            std::vector<Word> constraints;
            std::vector<int> rhs;
            for (Word r : frame.rows) {
                Word c = swap_halves(r, n_);
                constraints.push_back(c & f2::low_mask(q));
                rhs.push_back(f2::bit(c, q) ? 1 : 0);
            }
            auto particular = f2::solve(constraints, rhs, q);
            if (!particular) {
                continue;
            }
            frame.free_basis = f2::kernel(constraints, q);
            frame.current = (Word{1} << q) | *particular;
            frame.counter = 0;
            return;
        }
        frame.pivot = -1;
    }

    int n_;
    bool pending_zero_ = false;
    std::vector<Frame> stack_;
};

/// Calls visit(T) for every Lagrangian T of F2^{2n}.
template <typename Visit>
void for_each_lagrangian(int n, Visit &&visit, const ResourceCaps &caps = {}) {
    LagrangianEnumerator it(n, caps);
    while (auto t = it.next()) {
        visit(*t);
    }
}

inline std::vector<F2Subspace> enumerate_lagrangians(int n, const ResourceCaps &caps = {}) {
    std::vector<F2Subspace> out;
    out.reserve(lagrangian_count(n));
    for_each_lagrangian(n, [&](const F2Subspace &t) { out.push_back(t); }, caps);
    return out;
}

}  // namespace stabtest
