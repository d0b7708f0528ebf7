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
#include <span>
#include <stdexcept>
#include <vector>

namespace stabtest {

/// In-place unnormalized Walsh-Hadamard transform: out[y] = sum_x (-1)^{x.y} in[x].
/// The length must be a power of two. Applying it twice scales by the length.
template <typename T>
void walsh_hadamard(std::span<T> data) {
    const std::size_t len = data.size();
    if (!std::has_single_bit(len)) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                T u = data[j];
                T v = data[j + h];
                data[j] = u + v;
                data[j + h] = u - v;
            }
        }
    }
}

/// (f * f)(x) = sum_a f(a) f(x ^ a), via transform, pointwise square, inverse transform.
inline std::vector<double> xor_self_convolution(std::span<const double> f) {
    std::vector<double> work(f.begin(), f.end());
    walsh_hadamard(std::span<double>(work));
    for (double &w : work) {
        w *= w;
    }
    walsh_hadamard(std::span<double>(work));
    const double scale = 1.0 / static_cast<double>(work.size());
    for (double &w : work) {
        w *= scale;
    }
    return work;
}

}  // namespace stabtest
