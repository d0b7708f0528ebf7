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

// File formats: state JSON, subspace lists, cover JSON, verdict JSON, spectrum CSV.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabtest/cover.hpp"
#include "stabtest/sampler.hpp"
#include "stabtest/spectra.hpp"
#include "stabtest/state.hpp"

namespace stabtest::io {

using nlohmann::json;

/// {"n": int, "amplitudes": [[re, im], ...]} in computational-basis order.
inline json state_to_json(const QuantumState &s) {
    json amps = json::array();
    for (const auto &a : s.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"n", s.n()}, {"amplitudes", std::move(amps)}};
}

inline QuantumState state_from_json(const json &j, const ResourceCaps &caps = {}) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 0) {
            throw ConfigurationError("state file: negative n");
        }
        require_cap(n, caps.state, "state file");
        const auto &amps = j.at("amplitudes");
        std::vector<Complex> values;
        values.reserve(amps.size());
        for (const auto &pair : amps) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ConfigurationError("state file: each amplitude must be [re, im]");
            }
            values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return QuantumState(n, std::move(values), caps);
    } catch (const json::exception &e) {
        throw ConfigurationError(std::string("state file: ") + e.what());
    }
}

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigurationError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ConfigurationError(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigurationError("cannot write " + path);
    }
    out << text;
}

inline QuantumState read_state(const std::string &path, const ResourceCaps &caps = {}) {
    return state_from_json(read_json_file(path), caps);
}

inline void write_state(const std::string &path, const QuantumState &s) {
    write_text_file(path, state_to_json(s).dump() + "\n");
}

inline json subspace_to_json(const F2Subspace &s) { return s.to_strings(); }

/// A JSON array of Pauli strings, or {"n": int, "generators": [...]} (which allows the zero subspace).
inline F2Subspace subspace_from_json(const json &j) {
    try {
        if (j.is_array()) {
            return F2Subspace::from_strings(j.get<std::vector<std::string>>());
        }
        const int n = j.at("n").get<int>();
        std::vector<PauliIndex> gens;
        for (const auto &g : j.at("generators")) {
            gens.push_back(PauliIndex::parse(g.get<std::string>()));
        }
        return F2Subspace::span(n, gens);
    } catch (const json::exception &e) {
        throw ConfigurationError(std::string("subspace: ") + e.what());
    }
}

/// Comma-separated Pauli strings, e.g. "XI,ZI"; all of length n.
inline F2Subspace parse_subspace_list(const std::string &text, int n) {
    std::vector<PauliIndex> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto g = PauliIndex::parse(item);
        if (g.n() != n) {
            throw ConfigurationError("generator " + item + " is not on " + std::to_string(n) + " qubits");
        }
        gens.push_back(g);
    }
    return F2Subspace::span(n, gens);
}

inline json matrix_rows_json(const f2::BitMatrix &m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        std::string row;
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(m.get(i, j) ? '1' : '0');
        }
        rows.push_back(row);
    }
    return rows;
}

/// {"n", "subgroup", "k", "m", "U": bit rows, "groups": [[Pauli strings], ...]}.
inline json cover_to_json(const StabilizerCover &cover) {
    json groups = json::array();
    for (const auto &g : cover.groups) {
        groups.push_back(subspace_to_json(g));
    }
    return {{"n", cover.form.source.n()},
            {"subgroup", subspace_to_json(cover.form.source)},
            {"k", cover.k},
            {"m", cover.m},
            {"U", matrix_rows_json(cover.form.map.matrix())},
            {"groups", std::move(groups)}};
}

inline json verdict_to_json(const TesterVerdict &v) {
    return {{"decision", to_string(v.decision)}, {"eta_hat", v.eta_hat}, {"m", v.m},
            {"copies", v.copies},                {"threshold", v.threshold}, {"margin", v.margin},
            {"seed", v.seed}};
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

/// CSV with columns pauli,alpha,p,q; one row per label in increasing packed order.
inline void write_spectrum_csv(std::ostream &out, const WeylSpectrum &spec, const WeylDistribution &dist) {
    out << "pauli,alpha,p,q\n";
    for (std::size_t x = 0; x < spec.alpha.size(); ++x) {
        out << PauliIndex(spec.n, static_cast<Word>(x)).str() << ',' << format_double(spec.alpha[x]) << ','
            << format_double(spec.p[x]) << ',' << format_double(dist.q[x]) << '\n';
    }
}

}  // namespace stabtest::io
