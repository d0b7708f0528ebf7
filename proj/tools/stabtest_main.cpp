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

// Command-line front end: gen, analyze, test, cover, sweep.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stabtest/stabtest.hpp"

namespace {

using namespace stabtest;
using io::json;

struct StateOptions {
    std::string kind = "random-haar";
    int n = 1;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::string file;
};

void add_state_options(CLI::App *cmd, StateOptions &opts) {
    cmd->add_option("--kind", opts.kind, "random-haar | random-stabilizer | t-tensor | noisy-stabilizer");
    cmd->add_option("--n", opts.n, "qubit count");
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--noise", opts.noise, "interpolation weight for noisy-stabilizer");
    cmd->add_option("--file", opts.file, "read the state from a JSON state file instead of generating it");
}

QuantumState load_state(const StateOptions &opts, const ResourceCaps &caps) {
    if (!opts.file.empty()) {
        return io::read_state(opts.file, caps);
    }
    return generate_state({parse_state_kind(opts.kind), opts.n, opts.seed, opts.noise, {}}, caps);
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(out_path, text);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer testing toolkit: Gowers norms, Weyl spectra, tolerant testing, stabilizer covers"};
    app.require_subcommand(1);

    std::string out_path;

    StateOptions gen_opts;
    auto *gen = app.add_subcommand("gen", "generate a state and write it as JSON");
    add_state_options(gen, gen_opts);
    gen->add_option("--out", out_path, "output file (default: stdout)");

    std::string analysis;
    int gowers_k = 3;
    StateOptions analyze_opts;
    auto *analyze = app.add_subcommand("analyze", "analyze a state");
    analyze->add_option("what", analysis, "gowers | spectrum | fidelity | uniformity")
        ->required()
        ->check(CLI::IsMember({"gowers", "spectrum", "fidelity", "uniformity"}));
    add_state_options(analyze, analyze_opts);
    analyze->add_option("--k", gowers_k, "Gowers order (2 or 3)");
    analyze->add_option("--out", out_path, "output file (default: stdout)");

    StateOptions test_opts;
    TesterConfig tester;
    std::optional<double> threshold;
    std::optional<double> margin;
    auto *test = app.add_subcommand("test", "run the tolerant stabilizer tester; prints a JSON verdict");
    add_state_options(test, test_opts);
    test->add_option("--eps1", tester.eps1, "fidelity of yes-instances");
    test->add_option("--eps2", tester.eps2, "fidelity bound of no-instances");
    test->add_option("--fail-prob", tester.fail_prob, "allowed failure probability");
    test->add_option("--threshold", threshold, "acceptance threshold (default eps1^6/2)");
    test->add_option("--margin", margin, "estimation margin (default eps1^6/4)");

    std::string subgroup_list;
    std::string subgroup_file;
    std::string cover_state;
    int cover_n = 0;
    auto *cover = app.add_subcommand("cover", "canonical form and stabilizer cover of a subgroup; prints JSON");
    cover->add_option("--subgroup", subgroup_list, "comma-separated Pauli strings, e.g. XI,ZI");
    cover->add_option("--subgroup-file", subgroup_file, "JSON list of Pauli strings");
    cover->add_option("--n", cover_n, "qubit count for --subgroup");
    cover->add_option("--state", cover_state, "state file; adds the fidelity bound and purity check");

    std::string config_path;
    auto *sweep = app.add_subcommand("sweep", "run ensembles from a JSON config; writes CSV");
    sweep->add_option("--config", config_path, "sweep configuration file")->required();
    sweep->add_option("--out", out_path, "CSV output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ResourceCaps caps = ResourceCaps::from_env();

        if (*gen) {
            emit(io::state_to_json(load_state(gen_opts, caps)).dump() + "\n", out_path);
        } else if (*analyze) {
            const QuantumState s = load_state(analyze_opts, caps);
            if (analysis == "gowers") {
                emit(io::format_double(gowers_norm_pow(s, gowers_k, caps)) + "\n", out_path);
            } else if (analysis == "uniformity") {
                const WeylSpectrum spec = weyl_spectrum(s, caps);
                emit(io::format_double(weyl_uniformity(spec, weyl_distribution(spec))) + "\n", out_path);
            } else if (analysis == "spectrum") {
                const WeylSpectrum spec = weyl_spectrum(s, caps);
                std::ostringstream csv;
                io::write_spectrum_csv(csv, spec, weyl_distribution(spec));
                emit(csv.str(), out_path);
            } else {
                const WeylSpectrum spec = weyl_spectrum(s, caps);
                const StabilizerWitness w = stabilizer_fidelity_exact(spec, caps);
                const SubspaceMassBound c = subspace_mass_bound(spec, caps);
                json out = {{"fidelity", w.fidelity},
                            {"group", io::subspace_to_json(w.group)},
                            {"generator_signs", w.generator_signs},
                            {"mass_bound", c.value},
                            {"mass_bound_lagrangian", io::subspace_to_json(c.lagrangian)}};
                emit(out.dump() + "\n", out_path);
            }
        } else if (*test) {
            tester.threshold = threshold;
            tester.margin = margin;
            tester.validate();
            SampleChannel channel(load_state(test_opts, caps), test_opts.seed, caps);
            std::cout << io::verdict_to_json(tolerant_test(channel, tester)).dump() << "\n";
        } else if (*cover) {
            F2Subspace v;
            if (!subgroup_file.empty()) {
                v = io::subspace_from_json(io::read_json_file(subgroup_file));
            } else if (!subgroup_list.empty()) {
                if (cover_n <= 0) {
                    throw ConfigurationError("--subgroup needs --n");
                }
                v = io::parse_subspace_list(subgroup_list, cover_n);
            } else {
                throw ConfigurationError("cover needs --subgroup or --subgroup-file");
            }
            const StabilizerCover c = stabilizer_cover(v, caps);
            json out = io::cover_to_json(c);
            if (!cover_state.empty()) {
                const QuantumState s = io::read_state(cover_state, caps);
                const WeylSpectrum spec = weyl_spectrum(s, caps);
                const SubgroupFidelityBound b = fidelity_from_subgroup(spec, v, caps);
                const PurityBound p = purity_bound_check(spec, v);
                out["bound"] = {{"value", b.bound}, {"group", io::subspace_to_json(b.group)}, {"index", b.index}};
                out["purity"] = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"ok", p.ok}};
            }
            std::cout << out.dump() << "\n";
        } else if (*sweep) {
            const SweepConfig cfg = sweep_config_from_json(io::read_json_file(config_path));
            std::ostringstream csv;
            const SweepSummary summary = run_sweep(cfg, csv, &std::cerr, caps);
            emit(csv.str(), out_path);
            std::cerr << "rows=" << summary.rows << " errors=" << summary.errors
                      << " inequality_violations=" << summary.inequality_violations;
            if (summary.min_exponent) {
                std::cerr << " min_log_fidelity_over_log_eta=" << io::format_double(*summary.min_exponent);
            }
            std::cerr << "\n";
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
