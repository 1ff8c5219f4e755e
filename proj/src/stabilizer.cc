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

#include "qlr/stabilizer.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace qlr {

StabilizerCode::StabilizerCode(FpMatrix generators) : generators_(std::move(generators)) {
    if (generators_.cols() % 2) {
        throw std::invalid_argument("stabilizer generators need 2n columns");
    }
    if (rank(generators_) != generators_.rows()) {
        throw std::invalid_argument("stabilizer generators are linearly dependent");
    }
    for (std::size_t i = 0; i < generators_.rows(); i++) {
        for (std::size_t j = i + 1; j < generators_.rows(); j++) {
            if (symp_product(field(), generators_.row(i), generators_.row(j)) != 0) {
                throw std::invalid_argument(
                    "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " do not commute (symplectic product is nonzero)");
            }
        }
    }
    if (generators_.rows() > n()) {
        throw std::invalid_argument("a self-orthogonal space in F_p^{2n} has dimension at most n");
    }
}

StabilizerCode StabilizerCode::from_spanning_set(const FpMatrix &rows) {
    RrefResult r = rref(rows);
    std::vector<std::size_t> keep = r.pivot_rows;
    std::sort(keep.begin(), keep.end());
    return StabilizerCode(rows.select_rows(keep));
}

PauliVector StabilizerCode::generator(std::size_t i) const {
    auto row = generators_.row(i);
    return PauliVector(field(), std::vector<fp_t>(row.begin(), row.end()));
}

std::size_t projected_dim(const FpMatrix &rows, const ErasurePattern &erasures) {
    return rank(project(rows, erasures));
}

std::optional<PauliVector> correctability_witness(const StabilizerCode &code, const ErasurePattern &erasures) {
    if (erasures.n() != code.n()) {
        throw std::invalid_argument("erasure pattern length does not match the code");
    }
    FpMatrix dual_local = restrict_to_coords(symp_dual(code.generators()), erasures);
    for (std::size_t r = 0; r < dual_local.rows(); r++) {
        if (!row_space_contains(code.generators(), dual_local.row(r))) {
            auto row = dual_local.row(r);
            return PauliVector(code.field(), std::vector<fp_t>(row.begin(), row.end()));
        }
    }
    return std::nullopt;
}

bool erasure_correctable(const StabilizerCode &code, const ErasurePattern &erasures) {
    if (erasures.n() != code.n()) {
        throw std::invalid_argument("erasure pattern length does not match the code");
    }
    // C ∩ F^I ⊆ C^⊥ ∩ F^I always, so equal dimensions suffice.
    return restrict_to_coords(code.generators(), erasures).rows() ==
           restrict_to_coords(symp_dual(code.generators()), erasures).rows();
}

MeasurementPlan plan_measurements(const StabilizerCode &code, const ErasurePattern &erasures) {
    if (auto w = correctability_witness(code, erasures)) {
        throw NotCorrectableError("erasures are not correctable: " + w->str() + " is undetectable", *w);
    }
    ColumnSplit split = split_on_columns(code.generators(), erasures.symplectic_columns());
    std::vector<std::size_t> recovering = support_of_rows(split.touching);
    return MeasurementPlan{erasures, std::move(split.touching), std::move(split.avoiding), std::move(recovering)};
}

bool verify_plan(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures) {
    if (observables.p() != code.p() || observables.cols() != code.generators().cols()) {
        throw std::invalid_argument("observables do not live in the code's space");
    }
    if (rank(vstack(code.generators(), observables)) != code.dim()) {
        throw std::invalid_argument("observables are not contained in the stabilizer space");
    }
    bool direct = restrict_to_coords(code.generators(), erasures).rows() ==
                  restrict_to_coords(symp_dual(observables), erasures).rows();
    bool projected = projected_dim(symp_dual(code.generators()), erasures) == projected_dim(observables, erasures);
    if (direct != projected) {
        throw std::logic_error("plan verification: intersection and projection forms disagree");
    }
    return direct;
}

Syndrome syndrome_of(const FpMatrix &observables, const PauliVector &error) {
    if (observables.cols() != error.data().size()) {
        throw std::invalid_argument("syndrome_of: length mismatch");
    }
    Syndrome s(observables.rows());
    for (std::size_t r = 0; r < observables.rows(); r++) {
        s[r] = symp_product(observables.field(), observables.row(r), error.data());
    }
    return s;
}

PauliVector decode(const StabilizerCode &code, const MeasurementPlan &plan, std::span<const fp_t> syndrome) {
    const PrimeField &f = code.field();
    const ErasurePattern &erasures = plan.erasures;
    if (syndrome.size() != plan.dim()) {
        throw std::invalid_argument(
            "syndrome has " + std::to_string(syndrome.size()) + " entries but the plan measures " +
            std::to_string(plan.dim()) + " observables");
    }
    for (fp_t v : syndrome) {
        if (v >= f.prime()) {
            throw std::invalid_argument("syndrome entry " + std::to_string(v) + " is not in F_p");
        }
    }
    // ⟨x, e⟩ for e = (α|β) on I is Σ x_a β − x_b α.
    const std::size_t k = erasures.size();
    FpMatrix equations(f, plan.dim(), 2 * k);
    for (std::size_t r = 0; r < plan.dim(); r++) {
        std::vector<fp_t> local = project(plan.observables.row(r), erasures);
        auto eq = equations.mutable_row(r);
        for (std::size_t j = 0; j < k; j++) {
            eq[j] = f.neg(local[k + j]);
            eq[k + j] = local[j];
        }
    }
    auto solution = solve_linear(equations, syndrome);
    if (!solution) {
        throw InconsistentSyndromeError("syndrome is not produced by any error on the erased positions");
    }
    std::vector<fp_t> e = std::move(*solution);
    // Canonical representative modulo C ∩ F^I.
    RrefResult stab = rref(project(restrict_to_coords(code.generators(), erasures), erasures));
    for (std::size_t i = 0; i < stab.rank(); i++) {
        fp_t c = e[stab.pivot_cols[i]];
        if (c == 0) {
            continue;
        }
        auto row = stab.rref.row(i);
        for (std::size_t j = 0; j < e.size(); j++) {
            e[j] = f.sub(e[j], f.mul(c, row[j]));
        }
    }
    return embed(f, e, erasures);
}

FpMatrix residual_check_basis(const StabilizerCode &code, const ErasurePattern &erasures) {
    return restrict_to_coords(code.generators(), erasures.complement());
}

namespace {

std::size_t capped_binomial(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
        if (result > cap) {
            return cap + 1;
        }
    }
    return result;
}

bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            idx[i]++;
            for (std::size_t j = i + 1; j < k; j++) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

// Visits every t-dimensional subspace of F_2^k as its RREF basis (bit j of a
// row is coordinate j). Order: pivot sets lexicographically, then free
// entries as a binary counter. Stops early when `visit` returns true.
bool for_each_binary_subspace(
    std::size_t k, std::size_t t, const std::function<bool(const std::vector<std::uint32_t> &)> &visit) {
    if (t > k) {
        return false;
    }
    std::vector<std::size_t> pivots(t);
    for (std::size_t i = 0; i < t; i++) {
        pivots[i] = i;
    }
    do {
        std::uint32_t pivot_mask = 0;
        for (std::size_t c : pivots) {
            pivot_mask |= 1u << c;
        }
        // Free slots: (row, col) with col > pivot of row and col not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < t; r++) {
            for (std::size_t c = pivots[r] + 1; c < k; c++) {
                if (!(pivot_mask >> c & 1u)) {
                    slots.emplace_back(r, c);
                }
            }
        }
        std::vector<std::uint32_t> rows(t);
        for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << slots.size()); assignment++) {
            for (std::size_t r = 0; r < t; r++) {
                rows[r] = 1u << pivots[r];
            }
            for (std::size_t s = 0; s < slots.size(); s++) {
                if (assignment >> s & 1u) {
                    rows[slots[s].first] |= 1u << slots[s].second;
                }
            }
            if (visit(rows)) {
                return true;
            }
        }
    } while (t > 0 && next_combination(pivots, k));
    return false;
}

bool odd_parity(std::uint32_t v) {
    return std::popcount(v) & 1;
}

// Linear functionals x ↦ (⟨g_j, x⟩)_j on C's coordinates, one per distinct
// value, for every x ∉ C of symplectic weight 1..delta. Binary only.
struct LowWeightFunctionals {
    std::vector<std::uint32_t> functionals;
    std::vector<std::uint32_t> generators;  // packed (a|b), bit i = a_i, bit n+i = b_i
};

LowWeightFunctionals low_weight_functionals(const StabilizerCode &code, std::size_t delta) {
    if (code.p() != 2 || code.dim() > 7 || code.n() > 8) {
        throw SizeLimitError(
            "fixed-set search is limited to p = 2, dim C <= 7, n <= 8 (got p = " + std::to_string(code.p()) +
            ", dim C = " + std::to_string(code.dim()) + ", n = " + std::to_string(code.n()) + ")");
    }
    if (delta > code.n()) {
        throw std::invalid_argument("delta exceeds the code length");
    }
    const std::size_t n = code.n();
    const std::size_t k = code.dim();
    LowWeightFunctionals out;
    for (std::size_t j = 0; j < k; j++) {
        std::uint32_t g = 0;
        for (std::size_t c = 0; c < 2 * n; c++) {
            g |= std::uint32_t{code.generators()(j, c)} << c;
        }
        out.generators.push_back(g);
    }
    const std::uint32_t low = (1u << n) - 1;
    std::set<std::uint32_t> seen;
    for (std::uint32_t x = 1; x < (1u << (2 * n)); x++) {
        std::uint32_t xa = x & low;
        std::uint32_t xb = x >> n;
        if (static_cast<std::size_t>(std::popcount(xa | xb)) > delta) {
            continue;
        }
        std::uint32_t func = 0;
        for (std::size_t j = 0; j < k; j++) {
            std::uint32_t g = out.generators[j];
            if (odd_parity((g & low) & xb) != odd_parity((g >> n) & xa)) {
                func |= 1u << j;
            }
        }
        if (func == 0) {
            std::vector<fp_t> v(2 * n);
            for (std::size_t c = 0; c < 2 * n; c++) {
                v[c] = x >> c & 1u;
            }
            if (!row_space_contains(code.generators(), v)) {
                throw UndefinedMinimumError(
                    "C^perp \\ C contains a vector of weight <= " + std::to_string(delta) +
                    ", so no fixed set corrects every such erasure pattern");
            }
            continue;
        }
        seen.insert(func);
    }
    out.functionals.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace

WorstCase worst_case_measurements(const StabilizerCode &code, std::size_t delta) {
    const std::size_t n = code.n();
    if (delta > n) {
        throw std::invalid_argument("delta exceeds the code length");
    }
    if (capped_binomial(n, delta, kMaxPatterns) > kMaxPatterns) {
        throw SizeLimitError(
            "C(" + std::to_string(n) + ", " + std::to_string(delta) + ") erasure patterns exceed the limit of " +
            std::to_string(kMaxPatterns));
    }
    std::vector<std::size_t> idx(delta);
    for (std::size_t i = 0; i < delta; i++) {
        idx[i] = i;
    }
    std::optional<WorstCase> best;
    do {
        ErasurePattern pattern(n, idx);
        std::size_t m = projected_dim(code.generators(), pattern);
        if (!best || m > best->measurements) {
            best = WorstCase{m, pattern};
        }
    } while (delta > 0 && next_combination(idx, n));
    return *best;
}

FixedSet min_fixed_set(const StabilizerCode &code, std::size_t delta) {
    LowWeightFunctionals lw = low_weight_functionals(code, delta);
    const std::size_t k = code.dim();
    std::optional<FixedSet> found;
    for (std::size_t t = 0; t <= k && !found; t++) {
        for_each_binary_subspace(k, t, [&](const std::vector<std::uint32_t> &rows) {
            // Each bad vector must be detected by some basis observable.
            for (std::uint32_t func : lw.functionals) {
                bool detected = std::any_of(rows.begin(), rows.end(), [&](std::uint32_t r) {
                    return odd_parity(r & func);
                });
                if (!detected) {
                    return false;
                }
            }
            FpMatrix obs(code.field(), 0, code.generators().cols());
            std::vector<fp_t> v(code.generators().cols());
            for (std::uint32_t r : rows) {
                std::fill(v.begin(), v.end(), 0);
                for (std::size_t j = 0; j < k; j++) {
                    if (r >> j & 1u) {
                        auto g = code.generators().row(j);
                        for (std::size_t c = 0; c < v.size(); c++) {
                            v[c] ^= g[c];
                        }
                    }
                }
                obs.append_row(v);
            }
            found = FixedSet{t, std::move(obs)};
            return true;
        });
    }
    if (!found) {
        throw UndefinedMinimumError("no subspace of C satisfies the weight condition");
    }
    if (min_fixed_set_dual_form(code, delta) != found->dim) {
        throw std::logic_error("fixed-set minimum disagrees with its dual form");
    }
    return *found;
}

std::size_t min_fixed_set_dual_form(const StabilizerCode &code, std::size_t delta) {
    LowWeightFunctionals lw = low_weight_functionals(code, delta);
    const std::size_t k = code.dim();
    // W ⊇ C^⊥ is determined by its image U in F^{2n}/C^⊥ ≅ F_2^k; a vector
    // lies in W exactly when its functional lies in U.
    for (std::size_t u = k + 1; u-- > 0;) {
        bool hit = for_each_binary_subspace(k, u, [&](const std::vector<std::uint32_t> &rows) {
            for (std::uint32_t func : lw.functionals) {
                std::uint32_t rem = func;
                for (std::uint32_t r : rows) {
                    std::uint32_t pivot = r & (~r + 1);
                    if (rem & pivot) {
                        rem ^= r;
                    }
                }
                if (rem == 0) {
                    return false;
                }
            }
            return true;
        });
        if (hit) {
            std::size_t dual_dim = 2 * code.n() - k + u;
            return 2 * code.n() - dual_dim;
        }
    }
    throw UndefinedMinimumError("no superspace of C^perp satisfies the weight condition");
}

}  // namespace qlr
