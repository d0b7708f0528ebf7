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
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "stabtest/errors.hpp"
#include "stabtest/spectra.hpp"

namespace stabtest {

/// Copy-consuming access to an unknown state.
///
/// The state is hidden behind sampling calls: Bell difference samples (4
/// copies each) and products of two single-copy W_x measurements (2 copies).
/// Sampling draws from the exact distributions rather than simulating the
/// measurement circuits. Not thread-safe; use one channel per thread.
class SampleChannel {
   public:
    SampleChannel(const QuantumState &state, std::uint64_t seed, const ResourceCaps &caps = {})
        : SampleChannel(weyl_spectrum(state, caps), seed) {}

    SampleChannel(WeylSpectrum spectrum, std::uint64_t seed)
        : spectrum_(std::move(spectrum)),
          seed_(seed),
          rng_(seed),
          characteristic_(spectrum_.p.begin(), spectrum_.p.end()) {
        validate_spectrum(spectrum_);
    }

    int n() const { return spectrum_.n; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t copies_consumed() const { return copies_; }

    /// x ~ q, drawn as the XOR of two independent draws from p. Consumes 4 copies.
    PauliIndex bell_difference_sample() {
        copies_ += 4;
        const std::size_t a = characteristic_(rng_);
        const std::size_t b = characteristic_(rng_);
        return PauliIndex(spectrum_.n, static_cast<Word>(a ^ b));
    }

    /// Product of two independent +-1 outcomes of measuring W_x, each +1 with
    /// probability (1 + alpha_x) / 2; its mean is alpha_x^2. Consumes 2 copies.
    int pauli_squared_sample(const PauliIndex &x) {
        if (x.n() != spectrum_.n) {
            throw DimensionError("label " + x.str() + " does not match the channel's qubit count");
        }
        copies_ += 2;
        const double plus = std::clamp((1.0 + spectrum_.alpha[x.bits()]) / 2.0, 0.0, 1.0);
        std::bernoulli_distribution outcome(plus);
        const int first = outcome(rng_) ? 1 : -1;
        const int second = outcome(rng_) ? 1 : -1;
        return first * second;
    }

   private:
    WeylSpectrum spectrum_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::discrete_distribution<std::size_t> characteristic_;
    std::uint64_t copies_ = 0;
};

/// Mean of m rounds of (Bell difference sample x, then a two-copy alpha_x^2 sample).
/// Unbiased for eta = E_{x~q}[alpha_x^2]; consumes 6m copies.
inline double estimate_uniformity(SampleChannel &channel, std::uint64_t m) {
    if (m == 0) {
        throw ConfigurationError("estimate_uniformity needs at least one round");
    }
    std::int64_t sum = 0;
    for (std::uint64_t r = 0; r < m; ++r) {
        sum += channel.pauli_squared_sample(channel.bell_difference_sample());
    }
    return static_cast<double>(sum) / static_cast<double>(m);
}

/// Rounds needed for a +-1 mean to land within delta of its expectation with
/// probability at least 1 - fail_prob (Hoeffding): ceil(2 ln(2/fail_prob) / delta^2).
inline std::uint64_t hoeffding_rounds(double delta, double fail_prob) {
    if (!(delta > 0.0) || !(fail_prob > 0.0 && fail_prob < 1.0)) {
        throw ConfigurationError("hoeffding_rounds needs delta > 0 and fail_prob in (0, 1)");
    }
    return static_cast<std::uint64_t>(std::ceil(2.0 * std::log(2.0 / fail_prob) / (delta * delta)));
}

struct TesterConfig {
    double eps1 = 0.9;
    double eps2 = 0.01;
    double fail_prob = 0.05;
    // Defaults: eps1^6 / 2 and eps1^6 / 4.
    std::optional<double> threshold;
    std::optional<double> margin;

    double resolved_threshold() const { return threshold.value_or(std::pow(eps1, 6) / 2.0); }
    double resolved_margin() const { return margin.value_or(std::pow(eps1, 6) / 4.0); }

    void validate() const {
        if (!(eps2 > 0.0 && eps2 < eps1 && eps1 <= 1.0)) {
            throw ConfigurationError("tolerant_test needs 0 < eps2 < eps1 <= 1 (got eps1=" + std::to_string(eps1) +
                                     ", eps2=" + std::to_string(eps2) + ")");
        }
        if (!(fail_prob > 0.0 && fail_prob < 1.0)) {
            throw ConfigurationError("tolerant_test needs 0 < fail_prob < 1");
        }
        if (!(resolved_margin() > 0.0) || !(resolved_threshold() > 0.0)) {
            throw ConfigurationError("tolerant_test threshold and margin must be positive");
        }
    }

    /// Round count; depends only on the margin and fail_prob, never on n.
    std::uint64_t rounds() const { return hoeffding_rounds(resolved_margin(), fail_prob); }
};

enum class Decision { Accept, Reject };

inline std::string to_string(Decision d) { return d == Decision::Accept ? "Accept" : "Reject"; }

struct TesterVerdict {
    Decision decision = Decision::Reject;
    double eta_hat = 0.0;
    std::uint64_t m = 0;
    std::uint64_t copies = 0;
    double threshold = 0.0;
    double margin = 0.0;
    std::uint64_t seed = 0;
};

/// Accepts iff the estimate of eta reaches the threshold.
///
/// A state with stabilizer fidelity >= eps1 has eta >= eps1^6, which clears the
/// default threshold eps1^6/2 by the margin eps1^6/4; m is set so the estimate
/// stays within that margin except with probability fail_prob.
inline TesterVerdict tolerant_test(SampleChannel &channel, const TesterConfig &config) {
    config.validate();
    TesterVerdict v;
    v.threshold = config.resolved_threshold();
    v.margin = config.resolved_margin();
    v.m = config.rounds();
    v.seed = channel.seed();
    const std::uint64_t before = channel.copies_consumed();
    v.eta_hat = estimate_uniformity(channel, v.m);
    v.copies = channel.copies_consumed() - before;
    v.decision = v.eta_hat >= v.threshold ? Decision::Accept : Decision::Reject;
    if (v.copies != 6 * v.m) {
        throw InternalConsistencyError("tester copy accounting drifted");
    }
    return v;
}

}  // namespace stabtest
