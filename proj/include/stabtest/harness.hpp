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

// State ensembles and the sweep driver behind `stabtest sweep`.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "stabtest/cover.hpp"
#include "stabtest/io.hpp"
#include "stabtest/sampler.hpp"
#include "stabtest/spectra.hpp"
#include "stabtest/stabilizer.hpp"

namespace stabtest {

enum class StateKind { RandomHaar, RandomStabilizer, TTensor, NoisyStabilizer, File };

inline std::string to_string(StateKind kind) {
    switch (kind) {
        case StateKind::RandomHaar:
            return "random-haar";
        case StateKind::RandomStabilizer:
            return "random-stabilizer";
        case StateKind::TTensor:
            return "t-tensor";
        case StateKind::NoisyStabilizer:
            return "noisy-stabilizer";
        case StateKind::File:
            return "file";
    }
    return "unknown";
}

inline StateKind parse_state_kind(const std::string &text) {
    for (auto kind : {StateKind::RandomHaar, StateKind::RandomStabilizer, StateKind::TTensor,
                      StateKind::NoisyStabilizer, StateKind::File}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    throw ConfigurationError("unknown state kind '" + text +
                             "' (expected random-haar, random-stabilizer, t-tensor, noisy-stabilizer, file)");
}

struct StateSpec {
    StateKind kind = StateKind::RandomHaar;
    int n = 1;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::string path;  // only for StateKind::File
};

/// splitmix64 finalizer over (seed, index); used for per-row and per-trial seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline QuantumState t_state() {
    const double r = 1.0 / std::numbers::sqrt2;
    return QuantumState(1, {Complex(r, 0.0), std::polar(r, std::numbers::pi / 4)});
}

inline QuantumState t_tensor(int n, const ResourceCaps &caps = {}) {
    require_cap(n, caps.state, "t-tensor");
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex one_amp = std::polar(r, std::numbers::pi / 4);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t e = 0; e < amps.size(); ++e) {
        amps[e] = std::pow(r, n - std::popcount(e)) * std::pow(one_amp, std::popcount(e));
    }
    return QuantumState::normalized(n, std::move(amps), caps);
}

inline QuantumState haar_state(int n, std::mt19937_64 &rng, const ResourceCaps &caps = {}) {
    require_cap(n, caps.state, "random-haar");
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex(re, im);
    }
    return QuantumState::normalized(n, std::move(amps), caps);
}

/// Uniform over all Lagrangians when they can be enumerated (n <= min(5, enumeration cap));
/// beyond that, random isotropic extension (not uniform).
inline F2Subspace random_lagrangian(int n, std::mt19937_64 &rng, const ResourceCaps &caps = {}) {
    if (n <= std::min(5, caps.enumeration)) {
        const auto &all = cached_lagrangians(n, caps);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    }
    F2Subspace t = F2Subspace::zero(n);
    while (t.dim() < n) {
        const auto complement = t.symplectic_complement().basis();
        Word v = 0;
        const std::uint64_t coeffs = rng();
        for (std::size_t j = 0; j < complement.size(); ++j) {
            if (f2::bit(coeffs, static_cast<int>(j))) {
                v ^= complement[j];
            }
        }
        if (!t.contains(v)) {
            t = t.with(v);
        }
    }
    return t;
}

inline QuantumState random_stabilizer_state(int n, std::mt19937_64 &rng, const ResourceCaps &caps = {}) {
    F2Subspace group = random_lagrangian(n, rng, caps);
    const Word signs = n == 0 ? 0 : (rng() & f2::low_mask(n));
    return stabilizer_state(group, signs);
}

inline QuantumState generate_state(const StateSpec &spec, const ResourceCaps &caps = {}) {
    if (spec.kind == StateKind::File) {
        return io::read_state(spec.path, caps);
    }
    if (spec.n < 1) {
        throw ConfigurationError("state generation needs n >= 1");
    }
    require_cap(spec.n, caps.state, to_string(spec.kind).c_str());
    std::mt19937_64 rng(spec.seed);
    switch (spec.kind) {
        case StateKind::RandomHaar:
            return haar_state(spec.n, rng, caps);
        case StateKind::RandomStabilizer:
            return random_stabilizer_state(spec.n, rng, caps);
        case StateKind::TTensor:
            return t_tensor(spec.n, caps);
        case StateKind::NoisyStabilizer: {
            if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) {
                throw ConfigurationError("noise must lie in [0, 1]");
            }
            const QuantumState stab = random_stabilizer_state(spec.n, rng, caps);
            const QuantumState haar = haar_state(spec.n, rng, caps);
            std::vector<Complex> amps(stab.dim());
            for (std::size_t e = 0; e < amps.size(); ++e) {
                amps[e] = (1.0 - spec.noise) * stab[e] + spec.noise * haar[e];
            }
            return QuantumState::normalized(spec.n, std::move(amps), caps);
        }
        case StateKind::File:
            break;
    }
    throw ConfigurationError("unhandled state kind");
}

struct EnsembleConfig {
    StateKind kind = StateKind::RandomHaar;
    int n = 1;
    int count = 1;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::string path;
};

struct SweepConfig {
    std::vector<EnsembleConfig> ensembles;
    double gamma = 0.5;      // heavy-set parameter for the heuristic subgroup
    double retention = 0.5;  // greedy_subgroup retention factor
    TesterConfig tester;
    bool run_tester = true;
    int threads = 0;  // 0: hardware concurrency
};

/// One CSV row. Optional fields are empty when a cap rules the quantity out.
struct SweepRecord {
    StateKind kind = StateKind::RandomHaar;
    int n = 0;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::optional<double> gowers3_pow8;
    std::optional<double> eta;
    std::optional<double> fact1;
    std::optional<double> exact_fidelity;
    std::optional<double> cover_bound;
    std::optional<int> k;
    std::optional<int> m;
    std::string verdict;
    std::string error;
};

inline const char *kSweepHeader = "kind,n,seed,noise,gowers3_pow8,eta,fact1,exact_fidelity,cover_bound,k,m,verdict";

inline SweepConfig sweep_config_from_json(const io::json &j) {
    try {
        SweepConfig cfg;
        const std::uint64_t base_seed = j.value("seed", std::uint64_t{0});
        for (const auto &e : j.at("ensembles")) {
            EnsembleConfig ens;
            ens.kind = parse_state_kind(e.at("kind").get<std::string>());
            ens.n = e.value("n", 1);
            ens.count = e.value("count", 1);
            ens.seed = e.value("seed", base_seed);
            ens.noise = e.value("noise", 0.0);
            ens.path = e.value("path", std::string());
            if (ens.count < 1) {
                throw ConfigurationError("ensemble count must be positive");
            }
            cfg.ensembles.push_back(ens);
        }
        cfg.gamma = j.value("gamma", cfg.gamma);
        cfg.retention = j.value("retention", cfg.retention);
        cfg.threads = j.value("threads", 0);
        if (j.contains("tester")) {
            const auto &t = j.at("tester");
            cfg.run_tester = t.value("enabled", true);
            cfg.tester.eps1 = t.value("eps1", cfg.tester.eps1);
            cfg.tester.eps2 = t.value("eps2", cfg.tester.eps2);
            cfg.tester.fail_prob = t.value("fail_prob", cfg.tester.fail_prob);
        }
        if (cfg.run_tester) {
            cfg.tester.validate();
        }
        return cfg;
    } catch (const io::json::exception &e) {
        throw ConfigurationError(std::string("sweep config: ") + e.what());
    }
}

inline SweepRecord sweep_row(const EnsembleConfig &ens, int index, const SweepConfig &cfg, const ResourceCaps &caps) {
    SweepRecord row;
    row.kind = ens.kind;
    row.n = ens.n;
    row.seed = ens.kind == StateKind::File ? ens.seed : derive_seed(ens.seed, static_cast<std::uint64_t>(index));
    row.noise = ens.noise;
    try {
        const QuantumState s = generate_state({ens.kind, ens.n, row.seed, ens.noise, ens.path}, caps);
        row.n = s.n();
        if (s.n() <= caps.gowers3) {
            row.gowers3_pow8 = gowers_norm_pow(s, 3, caps);
        }
        const WeylSpectrum spec = weyl_spectrum(s, caps);
        row.eta = weyl_uniformity(spec, weyl_distribution(spec));
        if (s.n() <= caps.fidelity) {
            row.fact1 = subspace_mass_bound(spec, caps).value;
            row.exact_fidelity = stabilizer_fidelity_exact(spec, caps).fidelity;
        }
        const GreedySubgroup v = greedy_subgroup(spec, cfg.gamma, cfg.retention);
        const CanonicalForm form = canonical_form(v.group);
        row.k = form.k;
        row.m = form.m;
        if (form.k <= caps.cover_max_k) {
            row.cover_bound = fidelity_from_subgroup(spec, v.group, caps).bound;
        }
        if (cfg.run_tester) {
            SampleChannel channel(spec, derive_seed(row.seed, 0x7e57));
            row.verdict = to_string(tolerant_test(channel, cfg.tester).decision);
        }
    } catch (const std::exception &e) {
        row.verdict = "error";
        row.error = e.what();
    }
    return row;
}

inline std::string format_optional(const std::optional<double> &v) { return v ? io::format_double(*v) : ""; }

inline std::string to_csv_row(const SweepRecord &r) {
    std::string out = to_string(r.kind) + ',' + std::to_string(r.n) + ',' + std::to_string(r.seed) + ',' +
                      io::format_double(r.noise) + ',' + format_optional(r.gowers3_pow8) + ',' +
                      format_optional(r.eta) + ',' + format_optional(r.fact1) + ',' +
                      format_optional(r.exact_fidelity) + ',' + format_optional(r.cover_bound) + ',' +
                      (r.k ? std::to_string(*r.k) : "") + ',' + (r.m ? std::to_string(*r.m) : "") + ',' + r.verdict;
    return out;
}

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t errors = 0;
    std::size_t inequality_violations = 0;
    // min over rows with eta < 1 and a known fidelity of log F_S / log eta
    std::optional<double> min_exponent;
};

/// Mass-bound, cover-bound and eta >= F^6 inequalities that every row must satisfy.
inline std::size_t count_violations(const SweepRecord &r) {
    constexpr double slack = 1e-9;
    std::size_t bad = 0;
    if (r.gowers3_pow8 && (*r.gowers3_pow8 < -slack || *r.gowers3_pow8 > 1 + slack)) {
        ++bad;
    }
    if (r.exact_fidelity) {
        const double fs = *r.exact_fidelity;
        if (r.fact1 && *r.fact1 > fs + slack) {
            ++bad;
        }
        if (r.cover_bound && *r.cover_bound > fs + slack) {
            ++bad;
        }
        if (r.eta && *r.eta < std::pow(fs, 6) - slack) {
            ++bad;
        }
    }
    return bad;
}

/// Runs every ensemble row (in parallel), writes the CSV in row order and returns a summary.
inline SweepSummary run_sweep(const SweepConfig &cfg, std::ostream &csv, std::ostream *diagnostics = nullptr,
                              const ResourceCaps &caps = {}) {
    struct Job {
        const EnsembleConfig *ens;
        int index;
    };
    std::vector<Job> jobs;
    for (const auto &ens : cfg.ensembles) {
        for (int i = 0; i < ens.count; ++i) {
            jobs.push_back({&ens, i});
        }
    }
    std::vector<SweepRecord> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            rows[j] = sweep_row(*jobs[j].ens, jobs[j].index, cfg, caps);
        }
    };
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size()))));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    SweepSummary summary;
    csv << kSweepHeader << '\n';
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const SweepRecord &r = rows[j];
        csv << to_csv_row(r) << '\n';
        ++summary.rows;
        if (!r.error.empty()) {
            ++summary.errors;
            if (diagnostics) {
                *diagnostics << "row " << j << ": " << r.error << '\n';
            }
            continue;
        }
        summary.inequality_violations += count_violations(r);
        if (r.eta && r.exact_fidelity && *r.eta < 1.0 - 1e-12 && *r.eta > 0.0 && *r.exact_fidelity > 0.0) {
            const double exponent = std::log(*r.exact_fidelity) / std::log(*r.eta);
            if (!summary.min_exponent || exponent < *summary.min_exponent) {
                summary.min_exponent = exponent;
            }
        }
    }
    return summary;
}

}  // namespace stabtest
