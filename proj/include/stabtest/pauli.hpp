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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "stabtest/errors.hpp"
#include "stabtest/f2.hpp"

namespace stabtest {

using f2::Word;

inline constexpr int kMaxQubits = 32;

/// Label x = (a, b) of the Weyl operator W_x = i^{a.b} X^a Z^b on n qubits.
///
/// Packed into one word: the X-part a occupies bits [0, n), the Z-part b
/// occupies bits [n, 2n). Qubit q corresponds to bit q of a and of b. The
/// all-zero label is the identity.
class PauliIndex {
   public:
    PauliIndex() = default;

    PauliIndex(int n, Word bits) : n_(n), bits_(bits) {
        check_n(n);
        if ((bits & ~f2::low_mask(2 * n)) != 0) {
            throw DimensionError("PauliIndex: bits outside 2n=" + std::to_string(2 * n) + " coordinates");
        }
    }

    static PauliIndex identity(int n) { return PauliIndex(n, 0); }

    static PauliIndex from_parts(int n, Word x_part, Word z_part) {
        check_n(n);
        Word m = f2::low_mask(n);
        if ((x_part & ~m) != 0 || (z_part & ~m) != 0) {
            throw DimensionError("PauliIndex: part wider than n bits");
        }
        return PauliIndex(n, x_part | (z_part << n));
    }

    static PauliIndex x_on(int n, int qubit) { return from_parts(n, Word{1} << qubit, 0); }
    static PauliIndex z_on(int n, int qubit) { return from_parts(n, 0, Word{1} << qubit); }

    /// Parses the letter form, one of I/X/Y/Z per qubit, qubit 0 first ("XZIY").
    static PauliIndex parse(std::string_view letters) {
        int n = static_cast<int>(letters.size());
        if (n == 0) {
            throw ConfigurationError("empty Pauli string");
        }
        check_n(n);
        Word a = 0;
        Word b = 0;
        for (int q = 0; q < n; ++q) {
            switch (letters[q]) {
                case 'I':
                case '_':
                    break;
                case 'X':
                    a |= Word{1} << q;
                    break;
                case 'Y':
                    a |= Word{1} << q;
                    b |= Word{1} << q;
                    break;
                case 'Z':
                    b |= Word{1} << q;
                    break;
                default:
                    throw ConfigurationError("invalid Pauli letter '" + std::string(1, letters[q]) + "' in \"" +
                                             std::string(letters) + "\"");
            }
        }
        return from_parts(n, a, b);
    }

    /// Parses the binary form "(a|b)" with bit strings written qubit 0 first, e.g. "(11|00)".
    static PauliIndex parse_binary(std::string_view text) {
        if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
            throw ConfigurationError("binary Pauli form must look like (a|b): \"" + std::string(text) + "\"");
        }
        auto body = text.substr(1, text.size() - 2);
        auto bar = body.find('|');
        if (bar == std::string_view::npos || bar != body.size() - bar - 1) {
            throw ConfigurationError("binary Pauli form needs equal-length halves: \"" + std::string(text) + "\"");
        }
        int n = static_cast<int>(bar);
        check_n(n);
        Word a = 0;
        Word b = 0;
        for (int q = 0; q < n; ++q) {
            char ca = body[q];
            char cb = body[bar + 1 + q];
            if ((ca != '0' && ca != '1') || (cb != '0' && cb != '1')) {
                throw ConfigurationError("binary Pauli form accepts only 0/1: \"" + std::string(text) + "\"");
            }
            a |= static_cast<Word>(ca == '1') << q;
            b |= static_cast<Word>(cb == '1') << q;
        }
        return from_parts(n, a, b);
    }

    int n() const { return n_; }
    Word bits() const { return bits_; }
    Word x_part() const { return bits_ & f2::low_mask(n_); }
    Word z_part() const { return bits_ >> n_; }
    bool is_identity() const { return bits_ == 0; }

    std::string str() const {
        std::string out;
        out.reserve(n_);
        Word a = x_part();
        Word b = z_part();
        for (int q = 0; q < n_; ++q) {
            bool x = f2::bit(a, q);
            bool z = f2::bit(b, q);
            out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
        }
        return out;
    }

    std::string binary_str() const {
        std::string out = "(";
        for (int q = 0; q < n_; ++q) {
            out.push_back(f2::bit(x_part(), q) ? '1' : '0');
        }
        out.push_back('|');
        for (int q = 0; q < n_; ++q) {
            out.push_back(f2::bit(z_part(), q) ? '1' : '0');
        }
        out.push_back(')');
        return out;
    }

    PauliIndex operator^(const PauliIndex &other) const {
        require_same_n(*this, other);
        return PauliIndex(n_, bits_ ^ other.bits_);
    }

    auto operator<=>(const PauliIndex &) const = default;

    static void require_same_n(const PauliIndex &x, const PauliIndex &y) {
        if (x.n_ != y.n_) {
            throw DimensionError("Pauli labels on " + std::to_string(x.n_) + " and " + std::to_string(y.n_) +
                                 " qubits");
        }
    }

    static void check_n(int n) {
        if (n < 0 || n > kMaxQubits) {
            throw DimensionError("qubit count " + std::to_string(n) + " outside [0, 32]");
        }
    }

   private:
    int n_ = 0;
    Word bits_ = 0;
};

inline std::ostream &operator<<(std::ostream &out, const PauliIndex &x) { return out << x.str(); }

/// Exchanges the X and Z halves of a packed 2n-bit vector.
inline Word swap_halves(Word v, int n) { return (v >> n) | ((v & f2::low_mask(n)) << n); }

/// Symplectic form on packed 2n-bit vectors: a.b' + a'.b mod 2.
inline int symplectic_form(Word x, Word y, int n) { return f2::parity(x & swap_halves(y, n)); }

/// 0 iff W_x and W_y commute.
inline int symplectic_form(const PauliIndex &x, const PauliIndex &y) {
    PauliIndex::require_same_n(x, y);
    return symplectic_form(x.bits(), y.bits(), x.n());
}

}  // namespace stabtest
