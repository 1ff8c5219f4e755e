// Copyright 2026 The qlr Authors
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

#ifndef QLR_ERRORS_H
#define QLR_ERRORS_H

#include <stdexcept>
#include <string>

#include "qlr/symplectic.h"

namespace qlr {

// Malformed input is reported with std::invalid_argument. The types below
// are the domain-level failures.

/// The erasure pattern violates C ∩ F_p^I = C^⊥ ∩ F_p^I. Carries a vector of
/// C^⊥ ∩ F_p^I that is not in C.
class NotCorrectableError : public std::runtime_error {
   public:
    NotCorrectableError(const std::string &what, PauliVector witness)
        : std::runtime_error(what), witness_(std::move(witness)) {
    }
    const PauliVector &witness() const {
        return witness_;
    }

   private:
    PauliVector witness_;
};

/// A syndrome that no error supported on the erased positions produces.
class InconsistentSyndromeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation was refused because the instance is too large.
class SizeLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A minimum taken over an empty feasible set.
class UndefinedMinimumError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qlr

#endif
