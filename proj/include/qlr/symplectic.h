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

#ifndef QLR_SYMPLECTIC_H
#define QLR_SYMPLECTIC_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlr/fp_matrix.h"

namespace qlr {

/// A vector (a_1..a_n | b_1..b_n) in F_p^{2n}, stored contiguously as (a|b).
/// The a-part is the X exponent and the b-part the Z exponent of the
/// corresponding qudit Pauli operator.
class PauliVector {
   public:
    PauliVector(std::uint32_t p, std::size_t n);
    PauliVector(PrimeField field, std::vector<fp_t> packed);

    static PauliVector from_parts(std::uint32_t p, std::span<const std::int64_t> a, std::span<const std::int64_t> b);
    /// Parses "(10|01)" style strings (digit per entry, or comma separated
    /// entries when p > 10).
    static PauliVector parse(std::uint32_t p, const std::string &text);

    const PrimeField &field() const {
        return field_;
    }
    std::uint32_t p() const {
        return field_.prime();
    }
    std::size_t n() const {
        return data_.size() / 2;
    }
    fp_t x(std::size_t i) const {
        return data_[i];
    }
    fp_t z(std::size_t i) const {
        return data_[n() + i];
    }
    std::span<const fp_t> data() const {
        return data_;
    }
    std::span<fp_t> mutable_data() {
        return data_;
    }
    bool is_zero() const;

    bool operator==(const PauliVector &other) const = default;

    /// "(a|b)" with one digit per entry for p <= 10, comma separated otherwise.
    std::string str() const;

   private:
    PrimeField field_;
    std::vector<fp_t> data_;
};

/// Sorted set of erased qudit positions, 0-based internally. User-facing
/// input and output uses 1-based positions.
class ErasurePattern {
   public:
    ErasurePattern(std::size_t n, std::vector<std::size_t> zero_based);
    static ErasurePattern from_one_based(std::size_t n, const std::vector<std::size_t> &one_based);
    static ErasurePattern all(std::size_t n);

    std::size_t n() const {
        return n_;
    }
    std::size_t size() const {
        return indices_.size();
    }
    bool empty() const {
        return indices_.empty();
    }
    const std::vector<std::size_t> &indices() const {
        return indices_;
    }
    std::vector<std::size_t> one_based() const;
    bool contains(std::size_t i) const;
    ErasurePattern complement() const;
    /// Columns {i} ∪ {n+i} of F_p^{2n} owned by the pattern, ascending.
    std::vector<std::size_t> symplectic_columns() const;

    bool operator==(const ErasurePattern &other) const = default;

   private:
    std::size_t n_;
    std::vector<std::size_t> indices_;
};

/// Σ a_i b'_i − a'_i b_i over raw (a|b) spans of equal even length.
fp_t symp_product(const PrimeField &field, std::span<const fp_t> x, std::span<const fp_t> y);
fp_t symp_product(const PauliVector &x, const PauliVector &y);

/// Row-wise image under the symplectic form Ω = [[0, −I], [I, 0]]: each
/// row (a|b) maps to (b|−a), so that (xΩ)·y = −⟨x, y⟩.
FpMatrix apply_symplectic_form(const FpMatrix &c);

/// Basis of C^⊥ under the symplectic product: the kernel of C Ω.
FpMatrix symp_dual(const FpMatrix &c);

/// 0-based qudit positions i where x has a nonzero entry at i or n+i.
std::vector<std::size_t> support(const PauliVector &x);
std::vector<std::size_t> support(std::span<const fp_t> packed);
/// Union of supports of all rows, which equals the support of their span.
std::vector<std::size_t> support_of_rows(const FpMatrix &m);
std::size_t symp_weight(const PauliVector &x);
std::size_t symp_weight(std::span<const fp_t> packed);

/// P_I(x) = (a_{i1}..a_{ik} | b_{i1}..b_{ik}) for ascending i in I.
std::vector<fp_t> project(std::span<const fp_t> packed, const ErasurePattern &erasures);
PauliVector project(const PauliVector &x, const ErasurePattern &erasures);
FpMatrix project(const FpMatrix &c, const ErasurePattern &erasures);

/// Basis of C ∩ F_p^I: the vectors of rowspace(C) vanishing outside I.
FpMatrix restrict_to_coords(const FpMatrix &c, const ErasurePattern &erasures);

/// Embeds a vector of F_p^I (layout of `project`) back into F_p^{2n}.
PauliVector embed(const PrimeField &field, std::span<const fp_t> local, const ErasurePattern &erasures);

}  // namespace qlr

#endif
