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
#include <span>
#include <string>
#include <vector>

#include "stabtest/caps.hpp"
#include "stabtest/stabilizer.hpp"
#include "stabtest/transform.hpp"
#include "stabtest/weyl.hpp"

namespace stabtest {

inline constexpr double kAggregateTolerance = 1e-9;
inline constexpr double kTieTolerance = 1e-12;

/// All 4^n Weyl expectations alpha_x = <psi|W_x|psi> and p(x) = 2^{-n} alpha_x^2,
/// indexed by the packed label bits.
struct WeylSpectrum {
    int n = 0;
    std::vector<double> alpha;
    std::vector<double> p;

    double alpha_at(const PauliIndex &x) const { return alpha.at(x.bits()); }
    double p_at(const PauliIndex &x) const { return p.at(x.bits()); }
    /// 2^n p(x) = alpha_x^2.
    double weight(Word x) const { return alpha[x] * alpha[x]; }
};

/// q = p * p under XOR convolution: the distribution of Bell difference samples.
struct WeylDistribution {
    int n = 0;
    std::vector<double> q;
};

/// Throws unless alpha[0] = 1, all |alpha| <= 1 and sum p = 1, each within 1e-9.
inline void validate_spectrum(const WeylSpectrum &spec) {
    const std::size_t len = std::size_t{1} << (2 * spec.n);
    if (spec.alpha.size() != len || spec.p.size() != len) {
        throw DimensionError("spectrum on " + std::to_string(spec.n) + " qubits needs " + std::to_string(len) +
                             " entries");
    }
    if (std::abs(spec.alpha[0] - 1.0) > kAggregateTolerance) {
        throw NumericalIntegrityError("alpha at identity is " + std::to_string(spec.alpha[0]));
    }
    double total = 0.0;
    for (std::size_t x = 0; x < len; ++x) {
        if (std::abs(spec.alpha[x]) > 1.0 + kAggregateTolerance) {
            throw NumericalIntegrityError("expectation outside [-1, 1] at " + PauliIndex(spec.n, x).str());
        }
        total += spec.p[x];
    }
    if (std::abs(total - 1.0) > kAggregateTolerance) {
        throw NumericalIntegrityError("characteristic distribution sums to " + std::to_string(total));
    }
}

/// Every Weyl expectation of a state in O(n 4^n).
///
/// For each X-part a, g(e) = conj(s(e^a)) s(e) is transformed over e, which
/// yields sum_e (-1)^{b.e} g(e) for every Z-part b at once.
inline WeylSpectrum weyl_spectrum(const QuantumState &s, const ResourceCaps &caps = {}) {
    const int n = s.n();
    require_cap(n, caps.spectrum, "weyl_spectrum");
    const std::size_t dim = s.dim();
    WeylSpectrum spec;
    spec.n = n;
    spec.alpha.assign(dim * dim, 0.0);
    spec.p.assign(dim * dim, 0.0);
    const double inv_dim = 1.0 / static_cast<double>(dim);
    std::vector<Complex> g(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t e = 0; e < dim; ++e) {
            g[e] = std::conj(s[e ^ a]) * s[e];
        }
        walsh_hadamard(std::span<Complex>(g));
        for (std::size_t b = 0; b < dim; ++b) {
            Complex value = i_pow(std::popcount(a & b)) * g[b];
            if (std::abs(value.imag()) > kExpectationTolerance) {
                throw NumericalIntegrityError("expectation has imaginary part " + std::to_string(value.imag()));
            }
            const std::size_t x = a | (b << n);
            spec.alpha[x] = value.real();
            spec.p[x] = inv_dim * value.real() * value.real();
        }
    }
    validate_spectrum(spec);
    return spec;
}

inline WeylDistribution weyl_distribution(const WeylSpectrum &spec) {
    validate_spectrum(spec);
    WeylDistribution dist;
    dist.n = spec.n;
    dist.q = xor_self_convolution(spec.p);
    return dist;
}

/// eta = E_{x~q}[alpha_x^2] = sum_x q(x) 2^n p(x).
inline double weyl_uniformity(const WeylSpectrum &spec, const WeylDistribution &dist) {
    if (spec.n != dist.n || spec.alpha.size() != dist.q.size()) {
        throw DimensionError("spectrum and Weyl distribution come from different qubit counts");
    }
    double eta = 0.0;
    for (std::size_t x = 0; x < dist.q.size(); ++x) {
        eta += dist.q[x] * spec.weight(x);
    }
    return eta;
}

/// ||psi||_{U^k}^{2^k} by direct enumeration of every (x, h_1..h_k) tuple.
///
/// The eight (k=3) or four (k=2) factors of a tuple are f or conj(f) at
/// x ^ (omega . h), conjugated when |omega| is odd. The tuple sum is scaled by
/// 2^{n 2^{k-1}} / 2^{n(k+1)}, which is 1 for k=3.
inline double gowers_norm_pow(const QuantumState &s, int k, const ResourceCaps &caps = {}) {
    if (k != 2 && k != 3) {
        throw ConfigurationError("gowers_norm_pow supports k in {2, 3}, got " + std::to_string(k));
    }
    const int n = s.n();
    require_cap(n, caps.gowers3, "gowers_norm_pow");
    const std::size_t dim = s.dim();
    const auto &f = s.amplitudes();
    std::vector<Complex> fc(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        fc[i] = std::conj(f[i]);
    }

    Complex total = 0.0;
    if (k == 3) {
        for (std::size_t h1 = 0; h1 < dim; ++h1) {
            for (std::size_t h2 = 0; h2 < dim; ++h2) {
                const std::size_t h12 = h1 ^ h2;
                for (std::size_t h3 = 0; h3 < dim; ++h3) {
                    const std::size_t h13 = h1 ^ h3;
                    const std::size_t h23 = h2 ^ h3;
                    const std::size_t h123 = h12 ^ h3;
                    Complex partial = 0.0;
                    for (std::size_t x = 0; x < dim; ++x) {
                        partial += f[x] * fc[x ^ h1] * fc[x ^ h2] * f[x ^ h12] * fc[x ^ h3] * f[x ^ h13] *
                                   f[x ^ h23] * fc[x ^ h123];
                    }
                    total += partial;
                }
            }
        }
    } else {
        for (std::size_t h1 = 0; h1 < dim; ++h1) {
            for (std::size_t h2 = 0; h2 < dim; ++h2) {
                const std::size_t h12 = h1 ^ h2;
                for (std::size_t x = 0; x < dim; ++x) {
                    total += f[x] * fc[x ^ h1] * fc[x ^ h2] * f[x ^ h12];
                }
            }
        }
        total *= std::ldexp(1.0, -n);
    }
    if (std::abs(total.imag()) > kAggregateTolerance) {
        throw NumericalIntegrityError("Gowers sum has imaginary part " + std::to_string(total.imag()));
    }
    if (total.real() < -kAggregateTolerance || total.real() > 1.0 + kAggregateTolerance) {
        throw NumericalIntegrityError("Gowers value " + std::to_string(total.real()) + " outside [0, 1]");
    }
    return total.real();
}

/// Maximizing stabilizer state: the Lagrangian `group` with signs
/// (-1)^{generator_signs_i} on its basis generators, and |<phi|psi>|^2.
struct StabilizerWitness {
    F2Subspace group;
    Word generator_signs = 0;
    double fidelity = 0.0;
};

namespace detail {

// a beats b: larger by more than the tie tolerance, or tied and lexicographically smaller.
inline bool better_candidate(double a, const F2Subspace &ga, double b, const F2Subspace &gb) {
    if (a > b + kTieTolerance) {
        return true;
    }
    return a >= b - kTieTolerance && ga < gb;
}

}  // namespace detail

/// max over stabilizer states |<phi|psi>|^2, by exhaustion over Lagrangians.
///
/// For a Lagrangian with generators g_1..g_n, E(c) = <psi| prod_i W_{g_i}^{c_i} |psi>
/// is read from the spectrum with the product phase, and the projector mass
/// 2^{-n} sum_c (-1)^{sigma.c} E(c) is obtained for all 2^n sign vectors sigma
/// by one Walsh-Hadamard transform.
inline StabilizerWitness stabilizer_fidelity_exact(const WeylSpectrum &spec, const ResourceCaps &caps = {}) {
    const int n = spec.n;
    require_cap(n, caps.fidelity, "stabilizer_fidelity_exact");
    const std::size_t dim = std::size_t{1} << n;
    const double inv_dim = 1.0 / static_cast<double>(dim);
    StabilizerWitness best;
    bool have = false;
    std::vector<double> e(dim);
    for (const F2Subspace &group : cached_lagrangians(n, caps)) {
        auto elems = group_elements(group);
        for (std::size_t c = 0; c < dim; ++c) {
            double a = spec.alpha[elems[c].label];
            if (elems[c].phase % 2 != 0) {
                if (std::abs(a) > kExpectationTolerance) {
                    throw InternalConsistencyError("odd phase on a commuting product");
                }
                a = 0.0;
            }
            e[c] = elems[c].phase == 2 ? -a : a;
        }
        walsh_hadamard(std::span<double>(e));
        std::size_t arg = 0;
        for (std::size_t sigma = 1; sigma < dim; ++sigma) {
            if (e[sigma] > e[arg] + kTieTolerance) {
                arg = sigma;
            }
        }
        double value = e[arg] * inv_dim;
        if (!have || detail::better_candidate(value, group, best.fidelity, best.group)) {
            best = {group, static_cast<Word>(arg), value};
            have = true;
        }
    }
    return best;
}

inline StabilizerWitness stabilizer_fidelity_exact(const QuantumState &s, const ResourceCaps &caps = {}) {
    require_cap(s.n(), caps.fidelity, "stabilizer_fidelity_exact");
    return stabilizer_fidelity_exact(weyl_spectrum(s, caps), caps);
}

/// sum_{x in T} p(x) for a subspace T.
inline double subspace_mass(const WeylSpectrum &spec, const F2Subspace &t) {
    double mass = 0.0;
    t.for_each([&](Word x) { mass += spec.p[x]; });
    return mass;
}

struct SubspaceMassBound {
    double value = 0.0;
    F2Subspace lagrangian;
};

/// Lagrangian T maximizing sum_{x in T} p(x); that mass lower-bounds the stabilizer fidelity.
inline SubspaceMassBound subspace_mass_bound(const WeylSpectrum &spec, const ResourceCaps &caps = {}) {
    SubspaceMassBound best;
    bool have = false;
    for (const F2Subspace &t : cached_lagrangians(spec.n, caps)) {
        double mass = subspace_mass(spec, t);
        if (!have || detail::better_candidate(mass, t, best.value, best.lagrangian)) {
            best = {mass, t};
            have = true;
        }
    }
    return best;
}

}  // namespace stabtest
