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

#include <bit>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "stabtest/errors.hpp"
#include "stabtest/pauli.hpp"
#include "stabtest/state.hpp"

namespace stabtest {

inline constexpr double kExpectationTolerance = 1e-10;

/// i^t for t taken mod 4.
inline Complex i_pow(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

namespace detail {

inline void require_match(const QuantumState &s, const PauliIndex &x) {
    if (s.n() != x.n()) {
        throw DimensionError("Weyl label " + x.str() + " applied to a " + std::to_string(s.n()) + "-qubit state");
    }
}

}  // namespace detail

/// W_x |s> with W_x = i^{a.b} X^a Z^b; (W_x s)(e ^ a) = i^{a.b} (-1)^{b.e} s(e).
inline QuantumState apply_weyl(const QuantumState &s, const PauliIndex &x) {
    detail::require_match(s, x);
    const Word a = x.x_part();
    const Word b = x.z_part();
    const Complex phase = i_pow(std::popcount(a & b));
    std::vector<Complex> out(s.dim());
    for (std::size_t e = 0; e < s.dim(); ++e) {
        double sign = f2::parity(b & e) ? -1.0 : 1.0;
        out[e ^ a] = phase * sign * s[e];
    }
    return QuantumState(s.n(), std::move(out));
}

/// <s|W_x|s>, checked to be real within 1e-10.
inline double weyl_expectation(const QuantumState &s, const PauliIndex &x) {
    detail::require_match(s, x);
    const Word a = x.x_part();
    const Word b = x.z_part();
    Complex acc = 0.0;
    for (std::size_t e = 0; e < s.dim(); ++e) {
        Complex term = std::conj(s[e ^ a]) * s[e];
        acc += f2::parity(b & e) ? -term : term;
    }
    acc *= i_pow(std::popcount(a & b));
    if (std::abs(acc.imag()) > kExpectationTolerance) {
        throw NumericalIntegrityError("expectation of " + x.str() + " has imaginary part " +
                                      std::to_string(acc.imag()));
    }
    return acc.real();
}

/// t with W_x W_y = i^t W_{x^y}, in [0, 4).
inline int weyl_product_phase(const PauliIndex &x, const PauliIndex &y) {
    PauliIndex::require_same_n(x, y);
    const Word a1 = x.x_part();
    const Word b1 = x.z_part();
    const Word a2 = y.x_part();
    const Word b2 = y.z_part();
    // i^{a1.b1} X^{a1} Z^{b1} i^{a2.b2} X^{a2} Z^{b2}
    //   = i^{a1.b1 + a2.b2} (-1)^{b1.a2} X^{a1^a2} Z^{b1^b2}
    //   = i^{a1.b1 + a2.b2 + 2 b1.a2 - (a1^a2).(b1^b2)} W_{x^y}
    int t = std::popcount(a1 & b1) + std::popcount(a2 & b2) + 2 * std::popcount(b1 & a2) -
            std::popcount((a1 ^ a2) & (b1 ^ b2));
    return ((t % 4) + 4) % 4;
}

}  // namespace stabtest
