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

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stabtest/caps.hpp"
#include "stabtest/errors.hpp"

namespace stabtest {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

/// Pure n-qubit state as 2^n amplitudes; basis index bit q is qubit q.
class QuantumState {
   public:
    QuantumState() = default;

    /// Takes amplitudes that are already unit-norm (within 1e-10).
    QuantumState(int n, std::vector<Complex> amplitudes, const ResourceCaps &caps = {})
        : n_(n), amps_(std::move(amplitudes)) {
        validate_shape(caps);
        double norm2 = squared_norm(amps_);
        if (std::abs(norm2 - 1.0) > kNormTolerance) {
            throw NumericalIntegrityError("state is not normalized: squared norm " + std::to_string(norm2));
        }
    }

    /// Rescales the amplitudes to unit norm.
    static QuantumState normalized(int n, std::vector<Complex> amplitudes, const ResourceCaps &caps = {}) {
        double norm2 = squared_norm(amplitudes);
        if (!(norm2 > 1e-300) || !std::isfinite(norm2)) {
            throw NumericalIntegrityError("cannot normalize a zero or non-finite vector");
        }
        double scale = 1.0 / std::sqrt(norm2);
        for (auto &a : amplitudes) {
            a *= scale;
        }
        return QuantumState(n, std::move(amplitudes), caps);
    }

    static QuantumState basis(int n, std::uint64_t index) {
        std::vector<Complex> amps(std::size_t{1} << n, 0.0);
        amps.at(index) = 1.0;
        return QuantumState(n, std::move(amps));
    }

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    /// |this> (x) |other>, with this state on the low qubits.
    QuantumState tensor(const QuantumState &other, const ResourceCaps &caps = {}) const {
        std::vector<Complex> amps(dim() * other.dim());
        for (std::size_t hi = 0; hi < other.dim(); ++hi) {
            for (std::size_t lo = 0; lo < dim(); ++lo) {
                amps[hi * dim() + lo] = amps_[lo] * other.amps_[hi];
            }
        }
        return QuantumState::normalized(n_ + other.n_, std::move(amps), caps);
    }

    Complex inner(const QuantumState &other) const {
        if (other.n_ != n_) {
            throw DimensionError("inner product of states on different qubit counts");
        }
        Complex acc = 0.0;
        for (std::size_t i = 0; i < dim(); ++i) {
            acc += std::conj(amps_[i]) * other.amps_[i];
        }
        return acc;
    }

    bool operator==(const QuantumState &) const = default;

   private:
    static double squared_norm(const std::vector<Complex> &amps) {
        double acc = 0.0;
        for (const auto &a : amps) {
            acc += std::norm(a);
        }
        return acc;
    }

    void validate_shape(const ResourceCaps &caps) const {
        if (n_ < 0) {
            throw DimensionError("negative qubit count");
        }
        require_cap(n_, caps.state, "QuantumState");
        if (amps_.size() != (std::size_t{1} << n_)) {
            throw DimensionError("state on " + std::to_string(n_) + " qubits needs " +
                                 std::to_string(std::size_t{1} << n_) + " amplitudes, got " +
                                 std::to_string(amps_.size()));
        }
    }

    int n_ = 0;
    std::vector<Complex> amps_;
};

}  // namespace stabtest
