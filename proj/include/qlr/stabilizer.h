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

#ifndef QLR_STABILIZER_H
#define QLR_STABILIZER_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qlr/errors.h"
#include "qlr/fp_matrix.h"
#include "qlr/symplectic.h"

namespace qlr {

/// A stabilizer code given by a basis of its self-orthogonal space
/// C ⊆ F_p^{2n}. One measurement per basis row is the baseline decoder.
class StabilizerCode {
   public:
    /// Rows must be linearly independent and pairwise symplectically
    /// orthogonal; throws std::invalid_argument otherwise.
    explicit StabilizerCode(FpMatrix generators);

    /// Keeps a maximal independent subset of `rows`, in input order.
    static StabilizerCode from_spanning_set(const FpMatrix &rows);

    const FpMatrix &generators() const {
        return generators_;
    }
    const PrimeField &field() const {
        return generators_.field();
    }
    std::uint32_t p() const {
        return generators_.p();
    }
    std::size_t n() const {
        return generators_.cols() / 2;
    }
    std::size_t dim() const {
        return generators_.rows();
    }
    /// Number of logical qudits, n − dim C.
    std::size_t k() const {
        return n() - dim();
    }
    PauliVector generator(std::size_t i) const;

   private:
    FpMatrix generators_;
};

using Syndrome = std::vector<fp_t>;

/// Observables to measure for one erasure pattern.
///
/// `observables` spans D with C = D + (C ∩ F_p^Ī) and D ∩ F_p^Ī = {0};
/// `residual` is a basis of C ∩ F_p^Ī. `recovering_set` is supp(D), 0-based.
struct MeasurementPlan {
    ErasurePattern erasures;
    FpMatrix observables;
    FpMatrix residual;
    std::vector<std::size_t> recovering_set;

    std::size_t dim() const {
        return observables.rows();
    }
};

/// dim P_I(span(rows)).
std::size_t projected_dim(const FpMatrix &rows, const ErasurePattern &erasures);

/// C ∩ F_p^I = C^⊥ ∩ F_p^I.
bool erasure_correctable(const StabilizerCode &code, const ErasurePattern &erasures);

/// A vector of (C^⊥ ∩ F_p^I) \ C, or nullopt when the pattern is correctable.
std::optional<PauliVector> correctability_witness(const StabilizerCode &code, const ErasurePattern &erasures);

/// Minimal measurement plan for the pattern. Throws NotCorrectableError when
/// the pattern cannot be corrected at all.
MeasurementPlan plan_measurements(const StabilizerCode &code, const ErasurePattern &erasures);

/// Whether measuring a basis of D ⊆ C identifies every error on I modulo C,
/// i.e. C ∩ F_p^I = D^⊥ ∩ F_p^I. The equivalent projected form
/// P_I(C^⊥) = P_I(D) is evaluated as well and must agree. Throws
/// std::invalid_argument when rowspace(D) is not inside C.
bool verify_plan(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures);

/// s_i = ⟨x_i, e⟩ for each observable row x_i.
Syndrome syndrome_of(const FpMatrix &observables, const PauliVector &error);

/// Recovers the error on the erased positions from the plan's syndrome.
///
/// The result is supported on I and is the canonical representative of its
/// class modulo C ∩ F_p^I: it vanishes on the pivot coordinates of the RREF
/// basis of C ∩ F_p^I (in P_I layout). Throws InconsistentSyndromeError if no
/// error on I produces `syndrome`.
PauliVector decode(const StabilizerCode &code, const MeasurementPlan &plan, std::span<const fp_t> syndrome);

/// Basis of C ∩ F_p^Ī, the generators left untouched by the erasures.
FpMatrix residual_check_basis(const StabilizerCode &code, const ErasurePattern &erasures);

struct WorstCase {
    std::size_t measurements;
    /// Lexicographically first pattern of the requested size attaining the maximum.
    ErasurePattern witness;
};

/// max over |I| = delta of dim C − dim C ∩ F_p^Ī. Enumerates all patterns;
/// throws SizeLimitError beyond `kMaxPatterns` of them.
WorstCase worst_case_measurements(const StabilizerCode &code, std::size_t delta);
inline constexpr std::size_t kMaxPatterns = 2'000'000;

struct FixedSet {
    std::size_t dim;
    /// Basis of a minimising D, the first one found in enumeration order.
    FpMatrix observables;
};

/// Smallest D ⊆ C such that every vector of D^⊥ \ C has symplectic weight
/// ≥ delta + 1, i.e. one fixed set of observables that handles every pattern
/// of delta erasures. Exhaustive over subspaces of C, so restricted to p = 2,
/// dim C ≤ 7, n ≤ 8 (SizeLimitError otherwise). Throws UndefinedMinimumError
/// when no D qualifies. The result is checked against
/// `min_fixed_set_dual_form`.
FixedSet min_fixed_set(const StabilizerCode &code, std::size_t delta);

/// The same minimum evaluated as 2n − max{dim W : W ⊇ C^⊥, w_s(W \ C) ≥ delta + 1},
/// by enumerating superspaces of C^⊥ instead of subspaces of C.
std::size_t min_fixed_set_dual_form(const StabilizerCode &code, std::size_t delta);

}  // namespace qlr

#endif
