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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stabtest/stabtest.hpp"

using namespace stabtest;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kUnitTol = 1e-9;
constexpr double kInequalitySlack = 1e-9;
constexpr double kTvLimit = 0.02;
constexpr double kEstimatorDelta = 0.05;
constexpr double kTesterRate = 0.95;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double eta_of(const WeylSpectrum &spec) { return weyl_uniformity(spec, weyl_distribution(spec)); }

Outcome exact_values() {
    Outcome out;
    const QuantumState t = t_state();
    const auto spec = weyl_spectrum(t);
    const double g = gowers_norm_pow(t, 3);
    const double g_oracle = oracle::gowers_bruteforce(t, 3).real();
    const double eta = eta_of(spec);
    const double fs = stabilizer_fidelity_exact(spec).fidelity;
    const double f1 = subspace_mass_bound(spec).value;
    const double cos2 = std::pow(std::cos(std::numbers::pi / 8), 2);
    const double worst_t = std::max({std::abs(g - 0.75), std::abs(g_oracle - 0.75), std::abs(eta - 0.625),
                                     std::abs(fs - cos2), std::abs(f1 - 0.75)});
    out.pass = worst_t <= kExactTol;

    std::vector<QuantumState> stabs;
    for (int n = 1; n <= 5; ++n) {
        stabs.push_back(QuantumState::basis(n, 0));
    }
    std::mt19937_64 rng(0xacce55);
    for (int i = 0; i < 100; ++i) {
        stabs.push_back(random_stabilizer_state(1 + i % 5, rng));
    }
    double worst_stab = 0.0;
    for (const auto &s : stabs) {
        const auto sp = weyl_spectrum(s);
        for (double v : {gowers_norm_pow(s, 3), eta_of(sp), stabilizer_fidelity_exact(sp).fidelity,
                         subspace_mass_bound(sp).value}) {
            worst_stab = std::max(worst_stab, std::abs(v - 1.0));
        }
    }
    out.pass = out.pass && worst_stab <= kUnitTol;
    out.detail = fmt("T-state: gowers3=%.15f eta=%.15f F_S=%.15f mass bound=%.15f, max err %.1e; %zu stabilizer states, "
                     "max |value-1| %.1e",
                     g, eta, fs, f1, worst_t, stabs.size(), worst_stab);
    return out;
}

Outcome inequalities() {
    const StateKind kinds[] = {StateKind::RandomHaar, StateKind::RandomStabilizer, StateKind::TTensor,
                               StateKind::NoisyStabilizer};
    std::size_t states = 0;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::mt19937_64 subgroups(0x5b9);
    auto check = [&](bool ok) {
        ++checks;
        violations += ok ? 0 : 1;
    };
    for (StateKind kind : kinds) {
        for (int i = 0; i < 200; ++i) {
            const int n = 1 + i % 5;
            const StateSpec spec{kind, n, derive_seed(0x1e9, states), 0.05 * (i % 8), {}};
            ++states;
            const auto ws = weyl_spectrum(generate_state(spec));
            const double fs = stabilizer_fidelity_exact(ws).fidelity;
            check(subspace_mass_bound(ws).value <= fs + kInequalitySlack);
            check(eta_of(ws) >= std::pow(fs, 6) - kInequalitySlack);
            std::vector<F2Subspace> vs{greedy_subgroup(ws, 0.5).group};
            for (int j = 0; j < 3; ++j) {
                vs.push_back(oracle::random_subspace(n, subgroups));
            }
            for (const auto &v : vs) {
                check(fidelity_from_subgroup(ws, v).bound <= fs + kInequalitySlack);
                const auto purity = purity_bound_check(ws, v);
                check(purity.lhs <= purity.rhs + kInequalitySlack);
            }
        }
    }
    return {violations == 0, fmt("%zu states, %zu inequality checks, %zu violations", states, checks, violations)};
}

Outcome cover_suite() {
    std::mt19937_64 rng(0xc0e7);
    std::size_t failures = 0;
    std::size_t groups = 0;
    std::size_t subgroups = 0;
    for (int n = 2; n <= 6; ++n) {
        const F2Subspace everything = F2Subspace::full(n);
        for (int trial = 0; trial < 100; ++trial) {
            const F2Subspace v = oracle::random_subspace(n, rng);
            ++subgroups;
            const StabilizerCover cover = stabilizer_cover(v);
            bool ok = cover.groups.size() == (std::size_t{1} << (2 * cover.k));
            for (const auto &g : cover.groups) {
                ok = ok && g.is_lagrangian();
            }
            v.for_each([&](Word y) {
                bool found = false;
                for (const auto &g : cover.groups) {
                    found = found || g.contains(y);
                }
                ok = ok && found;
            });
            // M^T J M = J, checked on every pair of unit vectors
            const SymplecticMap &u = cover.form.map;
            for (int i = 0; i < 2 * n; ++i) {
                for (int j = 0; j < 2 * n; ++j) {
                    const Word ei = Word{1} << i;
                    const Word ej = Word{1} << j;
                    ok = ok && symplectic_form(u.apply(ei), u.apply(ej), n) == symplectic_form(ei, ej, n);
                }
            }
            ok = ok && u.apply(everything) == everything;
            // U maps V onto <Z_1, X_1, ..., Z_k, X_k, Z_{k+1}, ..., Z_{k+m}>
            std::vector<Word> target;
            for (int q = 0; q < cover.k; ++q) {
                target.push_back(PauliIndex::z_on(n, q).bits());
                target.push_back(PauliIndex::x_on(n, q).bits());
            }
            for (int q = cover.k; q < cover.k + cover.m; ++q) {
                target.push_back(PauliIndex::z_on(n, q).bits());
            }
            ok = ok && u.apply(v) == F2Subspace::span(n, target) && cover.k + cover.m <= n;
            groups += cover.groups.size();
            failures += ok ? 0 : 1;
        }
    }
    return {failures == 0, fmt("%zu subgroups, %zu cover groups, %zu failures", subgroups, groups, failures)};
}

Outcome enumeration_counts() {
    const std::size_t want[] = {3, 15, 135, 2295};
    bool ok = true;
    std::string got;
    for (int n = 1; n <= 4; ++n) {
        std::size_t product = 1;
        for (int k = 1; k <= n; ++k) {
            product *= (std::size_t{1} << k) + 1;
        }
        const auto all = enumerate_lagrangians(n);
        std::set<F2Subspace> distinct(all.begin(), all.end());
        bool lag = true;
        for (const auto &t : all) {
            lag = lag && t.is_lagrangian();
        }
        ok = ok && all.size() == want[n - 1] && product == want[n - 1] && distinct.size() == all.size() && lag;
        got += (n > 1 ? "," : "") + std::to_string(all.size());
    }
    return {ok, "counts " + got};
}

Outcome sampler() {
    const int n = 3;
    const int samples = 100000;
    std::mt19937_64 rng(0x7a3);
    const QuantumState s = haar_state(n, rng);
    const auto spec = weyl_spectrum(s);
    const auto q = weyl_distribution(spec).q;
    SampleChannel channel(spec, 0x7a4);
    std::vector<double> counts(q.size(), 0.0);
    for (int i = 0; i < samples; ++i) {
        counts[channel.bell_difference_sample().bits()] += 1.0;
    }
    double tv = 0.0;
    for (std::size_t x = 0; x < q.size(); ++x) {
        tv += std::abs(counts[x] / samples - q[x]);
    }
    tv /= 2.0;

    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(2.0 * std::log(6.0) / (kEstimatorDelta * kEstimatorDelta)));
    struct Case {
        const char *name;
        WeylSpectrum spec;
    };
    std::vector<Case> cases{{"T", weyl_spectrum(t_state())}, {"haar3", spec}};
    bool ok = tv <= kTvLimit;
    std::string detail = fmt("TV=%.4f at n=3 with %d samples; m=%llu", tv, samples, (unsigned long long)m);
    for (const auto &c : cases) {
        const double eta = eta_of(c.spec);
        int within = 0;
        for (int trial = 0; trial < 300; ++trial) {
            SampleChannel ch(c.spec, derive_seed(0xe57, trial));
            within += std::abs(estimate_uniformity(ch, m) - eta) <= kEstimatorDelta;
        }
        ok = ok && 3 * within >= 2 * 300;
        detail += fmt("; %s: %d/300 within delta", c.name, within);
    }
    return {ok, detail};
}

Outcome tester() {
    TesterConfig cfg;
    cfg.eps1 = 0.9;
    cfg.fail_prob = 0.05;
    const int trials = 200;

    int accepted = 0;
    int yes_states = 0;
    int drawn = 0;
    bool copies_ok = true;
    while (yes_states < trials) {
        const StateSpec spec{StateKind::NoisyStabilizer, 4, derive_seed(0x9e5, drawn), 0.1 * (1 + drawn % 3), {}};
        ++drawn;
        const auto ws = weyl_spectrum(generate_state(spec));
        if (stabilizer_fidelity_exact(ws).fidelity < 0.9) {
            continue;
        }
        SampleChannel ch(ws, derive_seed(0x9e6, drawn));
        const auto v = tolerant_test(ch, cfg);
        copies_ok = copies_ok && v.copies == 6 * v.m && ch.copies_consumed() == v.copies;
        accepted += v.decision == Decision::Accept;
        ++yes_states;
    }

    const auto t8 = weyl_spectrum(t_tensor(8));
    int t_rejected = 0;
    int haar_rejected = 0;
    std::uint64_t m8 = 0;
    for (int trial = 0; trial < trials; ++trial) {
        SampleChannel tc(t8, derive_seed(0x78, trial));
        const auto vt = tolerant_test(tc, cfg);
        t_rejected += vt.decision == Decision::Reject;
        m8 = vt.m;
        copies_ok = copies_ok && vt.copies == 6 * vt.m;

        std::mt19937_64 rng(derive_seed(0x4a, trial));
        SampleChannel hc(haar_state(8, rng), derive_seed(0x4b, trial));
        const auto vh = tolerant_test(hc, cfg);
        haar_rejected += vh.decision == Decision::Reject;
        copies_ok = copies_ok && vh.copies == 6 * vh.m;
    }
    SampleChannel small(t_tensor(4), 1);
    const std::uint64_t m4 = tolerant_test(small, cfg).m;

    const bool ok = accepted >= kTesterRate * trials && t_rejected >= kTesterRate * trials &&
                    haar_rejected >= kTesterRate * trials && m4 == m8 && copies_ok;
    return {ok, fmt("accept %d/%d noisy-stabilizer (F_S>=0.9, %d drawn); reject %d/%d T^8, %d/%d Haar n=8; "
                    "m(n=4)=%llu m(n=8)=%llu copies=6m:%s",
                    accepted, trials, drawn, t_rejected, trials, haar_rejected, trials, (unsigned long long)m4,
                    (unsigned long long)m8, copies_ok ? "yes" : "no")};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(0x0e9);
    double conv_err = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto spec = weyl_spectrum(haar_state(1 + trial % 3, rng));
        const auto fast = weyl_distribution(spec).q;
        const auto slow = oracle::naive_convolution(spec.p);
        for (std::size_t x = 0; x < fast.size(); ++x) {
            conv_err = std::max(conv_err, std::abs(fast[x] - slow[x]));
        }
    }
    const auto six = oracle::clifford_orbit_states(1);
    const auto sixty = oracle::clifford_orbit_states(2);
    double fid_err = 0.0;
    std::vector<QuantumState> inputs{t_state(), t_tensor(2)};
    for (int trial = 0; trial < 100; ++trial) {
        inputs.push_back(haar_state(1 + trial % 2, rng));
    }
    for (const auto &s : inputs) {
        const double brute = oracle::fidelity_bruteforce(s, s.n() == 1 ? six : sixty);
        fid_err = std::max(fid_err, std::abs(stabilizer_fidelity_exact(s).fidelity - brute));
    }
    const bool ok = conv_err <= kExactTol && fid_err <= kExactTol && six.size() == 6 && sixty.size() == 60;
    return {ok, fmt("convolution max err %.1e; fidelity max err %.1e over %zu states (%zu and %zu stabilizer states)",
                    conv_err, fid_err, inputs.size(), six.size(), sixty.size())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact values", 60, exact_values},
        {2, "inequality suite", 600, inequalities},
        {3, "cover suite", 600, cover_suite},
        {4, "Lagrangian enumeration counts", 600, enumeration_counts},
        {5, "sampler suite", 600, sampler},
        {6, "tester operating characteristics", 300, tester},
        {7, "oracle equivalence", 600, oracle_equivalence},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = out.pass && secs <= c.budget_seconds;
        failed += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s: %s (%.2f s of %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    out.detail.c_str(), secs, c.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
