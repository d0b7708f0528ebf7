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

#include <stdexcept>
#include <string>

namespace stabtest {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or bit width.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Invalid user-supplied parameters (ordering of thresholds, bad strings, ...).
class ConfigurationError : public Error {
   public:
    using Error::Error;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A requested size exceeds a configured resource cap.
class ResourceGuardError : public Error {
   public:
    using Error::Error;
};

/// A floating-point result failed a tolerance check (normalization, imaginary residue).
class NumericalIntegrityError : public Error {
   public:
    using Error::Error;
};

/// A self-check on a constructed object failed. Always a bug.
class InternalConsistencyError : public Error {
   public:
    using Error::Error;
};

/// Process exit code associated with an error category.
inline int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const ConfigurationError *>(&e) || dynamic_cast<const DimensionError *>(&e) ||
        dynamic_cast<const PreconditionError *>(&e)) {
        return 2;
    }
    if (dynamic_cast<const ResourceGuardError *>(&e)) {
        return 3;
    }
    if (dynamic_cast<const NumericalIntegrityError *>(&e)) {
        return 4;
    }
    return 1;
}

}  // namespace stabtest
