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

// Exhaustive reference computations for small instances. Nothing here uses
// row reduction: spaces are handled as explicit element lists, so these can
// check the linear-algebra path independently.

#ifndef QLR_ORACLE_H
#define QLR_ORACLE_H

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qlr/stabilizer.h"

namespace qlr::oracle {

using Vec = std::vector<fp_t>;

/// Enumeration cap for element lists and candidate errors.
inline constexpr std::size_t kMaxEnumeration = std::size_t{1} << 20;

/// Every linear combination of the rows, indexed by the base-p counter of
/// coefficients (row 0 least significant). May contain repeats when the rows
/// are dependent. Throws SizeLimitError above kMaxEnumeration.
std::vector<Vec> span_elements(const FpMatrix &rows);

/// Elements of C supported inside `erasures` (C ∩ F_p^I), deduplicated, sorted.
std::vector<Vec> restricted_elements(const StabilizerCode &code, const ErasurePattern &erasures);

/// Every e ∈ F_p^I, embedded in F_p^{2n}, grouped by the syndrome it produces
/// against the rows of `observables`.
std::map<Syndrome, std::vector<Vec>> syndrome_classes(const FpMatrix &observables, const ErasurePattern &erasures);

/// All e ∈ F_p^I (embedded in F_p^{2n}) with ⟨x_i, e⟩ = s_i for every row x_i
/// of `observables`, in counter order. Throws SizeLimitError when p^{2|I|}
/// exceeds kMaxEnumeration.
std::vector<Vec> brute_decode(
    const StabilizerCode &code, const ErasurePattern &erasures, const FpMatrix &observables, const Syndrome &syndrome);

/// C ∩ F_p^I = C^⊥ ∩ F_p^I by scanning F_p^I.
bool brute_correctable(const StabilizerCode &code, const ErasurePattern &erasures);

/// C ∩ F_p^I = D^⊥ ∩ F_p^I by scanning F_p^I.
bool brute_verify_plan(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures);

/// C = span(D) + (C ∩ F_p^Ī) as element sets.
bool brute_decomposes(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures);

/// Smallest dim D over every subspace D ⊆ C with C ∩ F_p^I = D^⊥ ∩ F_p^I.
/// Binary codes with dim C ≤ 7 only (SizeLimitError otherwise); throws
/// UndefinedMinimumError when the pattern is not correctable.
std::size_t brute_min_D(const StabilizerCode &code, const ErasurePattern &erasures);

/// Smallest dim D over every subspace D ⊆ C such that every vector of
/// D^⊥ \ C has symplectic weight ≥ delta + 1. Binary, dim C ≤ 7, n ≤ 8.
std::size_t brute_min_fixed_set(const StabilizerCode &code, std::size_t delta);

/// Minimum symplectic weight of R^⊥ \ R over the coordinates outside I,
/// where R = C ∩ F_p^Ī. nullopt when that set is empty.
std::optional<std::size_t> brute_residual_distance(const StabilizerCode &code, const ErasurePattern &erasures);

}  // namespace qlr::oracle

#endif
