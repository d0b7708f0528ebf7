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

#include <cstdlib>
#include <string>

#include "stabtest/errors.hpp"

namespace stabtest {

/// Upper limits on qubit counts for the exponential-cost routines.
///
/// Every limit is explicit: exceeding one raises ResourceGuardError rather than
/// truncating. Defaults can be overridden through environment variables
/// (see from_env).
struct ResourceCaps {
    int state = 12;        // largest QuantumState accepted
    int spectrum = 10;     // weyl_spectrum, 4^n expectations
    int gowers3 = 7;       // Gowers-3 enumeration, 2^(4n) tuples
    int enumeration = 6;   // Lagrangian enumeration
    int fidelity = 5;      // exact stabilizer fidelity
    int cover_exhaustive_log2 = 20;  // exhaustive cover verification up to |V| = 2^20
    int cover_max_k = 8;             // at most 4^8 groups in a stabilizer cover

    /// Reads STABTEST_CAP_{STATE,SPECTRUM,GOWERS3,ENUMERATION,FIDELITY,COVER_LOG2,COVER_K}.
    static ResourceCaps from_env() {
        ResourceCaps caps;
        read_env("STABTEST_CAP_STATE", caps.state);
        read_env("STABTEST_CAP_SPECTRUM", caps.spectrum);
        read_env("STABTEST_CAP_GOWERS3", caps.gowers3);
        read_env("STABTEST_CAP_ENUMERATION", caps.enumeration);
        read_env("STABTEST_CAP_FIDELITY", caps.fidelity);
        read_env("STABTEST_CAP_COVER_LOG2", caps.cover_exhaustive_log2);
        read_env("STABTEST_CAP_COVER_K", caps.cover_max_k);
        return caps;
    }

   private:
    static void read_env(const char *name, int &slot) {
        const char *value = std::getenv(name);
        if (value == nullptr || *value == '\0') {
            return;
        }
        try {
            std::size_t used = 0;
            int parsed = std::stoi(value, &used);
            if (used != std::string(value).size() || parsed < 0) {
                throw std::invalid_argument(name);
            }
            slot = parsed;
        } catch (const std::exception &) {
            throw ConfigurationError(std::string("invalid value for ") + name + ": '" + value + "'");
        }
    }
};

inline void require_cap(int n, int cap, const char *what) {
    if (n > cap) {
        throw ResourceGuardError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
    }
}

}  // namespace stabtest
