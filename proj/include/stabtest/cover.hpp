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

// Subgroups of Weyl labels: canonical forms, covers by stabilizer groups, and
// the fidelity bounds obtained from them.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "stabtest/caps.hpp"
#include "stabtest/spectra.hpp"
#include "stabtest/symplectic.hpp"

namespace stabtest {

/// U V U^-1 = <Z_1, X_1, ..., Z_k, X_k, Z_{k+1}, ..., Z_{k+m}> with U symplectic.
struct CanonicalForm {
    int k = 0;
    int m = 0;
    SymplecticMap map;
    F2Subspace source;
    std::vector<HyperbolicPair> pairs;
    std::vector<PauliIndex> residual;
};

inline CanonicalForm canonical_form(const F2Subspace &v) {
    auto gs = symplectic_gram_schmidt(v);
    CanonicalForm form;
    form.k = static_cast<int>(gs.pairs.size());
    form.m = static_cast<int>(gs.residual.size());
    form.map = gs.map;
    form.source = v;
    form.pairs = std::move(gs.pairs);
    form.residual = std::move(gs.residual);

    const int n = v.n();
    if (form.k + form.m > n || 2 * form.k + form.m != v.dim()) {
        throw InternalConsistencyError("canonical form dimension bookkeeping failed for " + to_string(v));
    }
    if (!form.map.preserves_form()) {
        throw InternalConsistencyError("canonical form map is not symplectic");
    }
    const F2Subspace target = canonical_span(n, form.k, form.m);
    if (form.map.apply(v) != target || form.map.inverse().apply(target) != v) {
        throw InternalConsistencyError("canonical form image mismatch for " + to_string(v));
    }
    return form;
}

/// 4^k Lagrangians whose union contains V.
///
/// groups[a] is the pull-back through U of the Lagrangian completion of
/// <tau_a> x <Z_{k+1}, ..., Z_{k+m}>, where tau_a runs over all labels on the
/// first k qubits (a's low k bits are the X-part, the next k the Z-part).
/// Duplicates are kept so that groups.size() == 4^k.
struct StabilizerCover {
    std::vector<F2Subspace> groups;
    int k = 0;
    int m = 0;
    CanonicalForm form;
};

namespace detail {

inline std::size_t cover_slot(const CanonicalForm &form, Word image) {
    const int n = form.map.n();
    const Word mask = f2::low_mask(form.k);
    return static_cast<std::size_t>((image & mask) | (((image >> n) & mask) << form.k));
}

inline void verify_cover(const StabilizerCover &cover, const ResourceCaps &caps) {
    const F2Subspace &v = cover.form.source;
    auto check = [&](Word y) {
        const std::size_t slot = cover_slot(cover.form, cover.form.map.apply(y));
        if (slot < cover.groups.size() && cover.groups[slot].contains(y)) {
            return;
        }
        for (const auto &g : cover.groups) {
            if (g.contains(y)) {
                return;
            }
        }
        throw InternalConsistencyError("cover misses element " + PauliIndex(v.n(), y).str());
    };
    if (v.dim() <= caps.cover_exhaustive_log2) {
        v.for_each(check);
        return;
    }
    for (Word g : v.basis()) {
        check(g);
    }
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 10000; ++i) {
        Word y = 0;
        const std::uint64_t coeffs = rng();
        for (std::size_t j = 0; j < v.basis().size(); ++j) {
            if (f2::bit(coeffs, static_cast<int>(j))) {
                y ^= v.basis()[j];
            }
        }
        check(y);
    }
}

}  // namespace detail

inline StabilizerCover stabilizer_cover(const F2Subspace &v, const ResourceCaps &caps = {}) {
    StabilizerCover cover;
    cover.form = canonical_form(v);
    cover.k = cover.form.k;
    cover.m = cover.form.m;
    if (cover.k > caps.cover_max_k) {
        throw ResourceGuardError("stabilizer_cover: k=" + std::to_string(cover.k) + " exceeds cap " +
                                 std::to_string(caps.cover_max_k));
    }
    const int n = v.n();
    const int k = cover.k;
    const SymplecticMap inverse = cover.form.map.inverse();

    std::vector<Word> tail;
    for (int q = k; q < k + cover.m; ++q) {
        tail.push_back(Word{1} << (n + q));
    }
    const std::size_t count = std::size_t{1} << (2 * k);
    cover.groups.reserve(count);
    for (std::size_t a = 0; a < count; ++a) {
        const Word mask = f2::low_mask(k);
        const Word tau = (a & mask) | (((a >> k) & mask) << n);
        std::vector<Word> gens = tail;
        gens.push_back(tau);
        F2Subspace group = inverse.apply(complete_to_lagrangian(F2Subspace::span(n, gens)));
        if (!group.is_lagrangian()) {
            throw InternalConsistencyError("cover group " + to_string(group) + " is not Lagrangian");
        }
        cover.groups.push_back(std::move(group));
    }
    detail::verify_cover(cover, caps);
    return cover;
}

struct PurityBound {
    double lhs = 0.0;  // sum_{x in V} alpha_x^2
    double rhs = 0.0;  // 2^{k+m}
    bool ok = false;
    int k = 0;
    int m = 0;
};

/// sum_{x in V} 2^n p(x) <= 2^{k+m} for the canonical form of V.
inline PurityBound purity_bound_check(const WeylSpectrum &spec, const F2Subspace &v) {
    if (spec.n != v.n()) {
        throw DimensionError("spectrum and subgroup on different qubit counts");
    }
    const CanonicalForm form = canonical_form(v);
    PurityBound out;
    v.for_each([&](Word x) { out.lhs += spec.weight(x); });
    out.rhs = std::ldexp(1.0, form.k + form.m);
    out.ok = out.lhs <= out.rhs + kAggregateTolerance;
    out.k = form.k;
    out.m = form.m;
    return out;
}

inline PurityBound purity_bound_check(const QuantumState &s, const F2Subspace &v, const ResourceCaps &caps = {}) {
    return purity_bound_check(weyl_spectrum(s, caps), v);
}

/// {x : 2^n p(x) >= gamma / 4}, in increasing label order.
inline std::vector<PauliIndex> heavy_set(const WeylSpectrum &spec, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ConfigurationError("heavy_set needs 0 < gamma <= 1");
    }
    std::vector<PauliIndex> out;
    const double cut = gamma / 4.0;
    for (std::size_t x = 0; x < spec.alpha.size(); ++x) {
        if (spec.weight(x) >= cut) {
            out.emplace_back(spec.n, static_cast<Word>(x));
        }
    }
    return out;
}

/// E_{y in V} [2^n p(y)].
inline double mean_weight(const WeylSpectrum &spec, const F2Subspace &v) {
    double total = 0.0;
    v.for_each([&](Word x) { total += spec.weight(x); });
    return total / static_cast<double>(v.size());
}

struct GreedySubgroup {
    F2Subspace group;
    double mean_weight = 1.0;
};

/// Heuristic subgroup with large mean weight, grown from the heavy set.
///
/// Heavy labels are tried by decreasing weight (ties by label). A label is kept
/// when the closure's mean weight stays at or above `retention` times the
/// current value. Returns the non-trivial closure with the best mean weight
/// seen (ties go to the larger, then lexicographically smaller, subgroup), or
/// the zero subgroup if nothing was kept.
inline GreedySubgroup greedy_subgroup(const WeylSpectrum &spec, double gamma, double retention = 0.5) {
    auto heavy = heavy_set(spec, gamma);
    std::stable_sort(heavy.begin(), heavy.end(), [&](const PauliIndex &x, const PauliIndex &y) {
        return spec.weight(x.bits()) > spec.weight(y.bits());
    });
    F2Subspace current = F2Subspace::zero(spec.n);
    double current_weight = 1.0;
    GreedySubgroup best{current, 1.0};
    for (const PauliIndex &x : heavy) {
        if (current.contains(x.bits())) {
            continue;
        }
        F2Subspace grown = current.with(x.bits());
        double w = mean_weight(spec, grown);
        if (w < retention * current_weight) {
            continue;
        }
        current = std::move(grown);
        current_weight = w;
        const bool first = best.group.dim() == 0;
        const bool better = w > best.mean_weight + kTieTolerance ||
                            (w >= best.mean_weight - kTieTolerance &&
                             (current.dim() > best.group.dim() ||
                              (current.dim() == best.group.dim() && current < best.group)));
        if (first || better) {
            best = {current, w};
        }
    }
    return best;
}

struct SubgroupFidelityBound {
    double bound = 0.0;
    F2Subspace group;
    std::size_t index = 0;
};

/// Best cover element of V by characteristic mass; the mass lower-bounds the stabilizer fidelity.
inline SubgroupFidelityBound fidelity_from_subgroup(const WeylSpectrum &spec, const F2Subspace &v,
                                                    const ResourceCaps &caps = {}) {
    if (spec.n != v.n()) {
        throw DimensionError("spectrum and subgroup on different qubit counts");
    }
    const StabilizerCover cover = stabilizer_cover(v, caps);
    SubgroupFidelityBound best;
    for (std::size_t i = 0; i < cover.groups.size(); ++i) {
        const double mass = subspace_mass(spec, cover.groups[i]);
        if (i == 0 || detail::better_candidate(mass, cover.groups[i], best.bound, best.group)) {
            best = {mass, cover.groups[i], i};
        }
    }
    return best;
}

inline SubgroupFidelityBound fidelity_from_subgroup(const QuantumState &s, const F2Subspace &v,
                                                    const ResourceCaps &caps = {}) {
    return fidelity_from_subgroup(weyl_spectrum(s, caps), v, caps);
}

/// |S + S| / |S| for a small set of labels (diagnostic only).
inline double doubling_constant(const std::vector<PauliIndex> &set) {
    if (set.empty()) {
        throw PreconditionError("doubling_constant of an empty set");
    }
    if (set.size() > 4096) {
        throw ResourceGuardError("doubling_constant limited to 4096 labels");
    }
    std::unordered_set<Word> distinct;
    std::unordered_set<Word> sums;
    for (const auto &x : set) {
        distinct.insert(x.bits());
    }
    for (Word x : distinct) {
        for (Word y : distinct) {
            sums.insert(x ^ y);
        }
    }
    return static_cast<double>(sums.size()) / static_cast<double>(distinct.size());
}

}  // namespace stabtest
