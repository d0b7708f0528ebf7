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
#include <map>
#include <mutex>
#include <vector>

#include "stabtest/caps.hpp"
#include "stabtest/lagrangian.hpp"
#include "stabtest/subspace.hpp"
#include "stabtest/weyl.hpp"

namespace stabtest {

/// Element of a stabilizer group written as a product of generators:
/// prod_i W_{g_i}^{c_i} = i^phase W_label, for the coefficient vector c that indexes it.
struct GroupElement {
    Word label;
    int phase;
};

/// All 2^dim products of the basis generators of an isotropic subspace, indexed
/// by coefficient vector c (bit i selects basis()[i]). Products are taken in
/// increasing generator order; for commuting generators the phase is always even.
inline std::vector<GroupElement> group_elements(const F2Subspace &group) {
    const int n = group.n();
    const auto &gens = group.basis();
    std::vector<GroupElement> out(std::size_t{1} << gens.size());
    out[0] = {0, 0};
    for (std::size_t c = 1; c < out.size(); ++c) {
        int h = f2::pivot_of(c);
        const GroupElement &prev = out[c ^ (std::size_t{1} << h)];
        int t = weyl_product_phase(PauliIndex(n, prev.label), PauliIndex(n, gens[h]));
        out[c] = {prev.label ^ gens[h], (prev.phase + t) % 4};
    }
    return out;
}

/// The stabilizer state fixed by (-1)^{signs_i} W_{g_i} for every basis generator g_i
/// of a Lagrangian. Built by applying prod_i (I + (-1)^{signs_i} W_{g_i}) / 2 to the
/// first computational basis state it does not annihilate.
inline QuantumState stabilizer_state(const F2Subspace &group, Word signs) {
    if (!group.is_lagrangian()) {
        throw PreconditionError("stabilizer_state: " + to_string(group) + " is not Lagrangian");
    }
    const int n = group.n();
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t e = 0; e < dim; ++e) {
        std::vector<Complex> v(dim, 0.0);
        v[e] = 1.0;
        for (std::size_t i = 0; i < group.basis().size(); ++i) {
            const PauliIndex g(n, group.basis()[i]);
            const double sign = f2::bit(signs, static_cast<int>(i)) ? -1.0 : 1.0;
            const Complex phase = i_pow(std::popcount(g.x_part() & g.z_part()));
            std::vector<Complex> w(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                double zsign = f2::parity(g.z_part() & j) ? -1.0 : 1.0;
                w[j ^ g.x_part()] = phase * zsign * v[j];
            }
            for (std::size_t j = 0; j < dim; ++j) {
                v[j] = 0.5 * (v[j] + sign * w[j]);
            }
        }
        double norm2 = 0.0;
        for (const auto &a : v) {
            norm2 += std::norm(a);
        }
        if (norm2 > 1e-6) {
            return QuantumState::normalized(n, std::move(v));
        }
    }
    throw InternalConsistencyError("stabilizer projector annihilated every basis state");
}

/// Every Lagrangian of F2^{2n}, enumerated once per process and shared.
inline const std::vector<F2Subspace> &cached_lagrangians(int n, const ResourceCaps &caps = {}) {
    require_cap(n, caps.enumeration, "enumerate_lagrangians");
    static std::mutex mutex;
    static std::map<int, std::vector<F2Subspace>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, enumerate_lagrangians(n, caps)).first;
    }
    return it->second;
}

}  // namespace stabtest
