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

#ifndef QLR_CSS_H
#define QLR_CSS_H

#include <cstddef>
#include <vector>

#include "qlr/fp_matrix.h"
#include "qlr/stabilizer.h"
#include "qlr/symplectic.h"

namespace qlr {

/// A classical [n, k] linear code over F_p given by a basis.
class ClassicalCode {
   public:
    /// Rows must be linearly independent.
    explicit ClassicalCode(FpMatrix generators);
    static ClassicalCode from_spanning_set(const FpMatrix &rows);
    static ClassicalCode zero(std::uint32_t p, std::size_t n);

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
        return generators_.cols();
    }
    std::size_t dim() const {
        return generators_.rows();
    }

   private:
    FpMatrix generators_;
};

/// Pair of classical codes with every C_Z generator Euclidean-orthogonal to
/// every C_X generator.
///
/// Sector convention: C_Z supplies the a (X) half and C_X the b (Z) half,
/// i.e. C = {(a|b) : a ∈ C_Z, b ∈ C_X}. On a surface C_Z holds the vertex
/// operators and C_X the face operators.
class CssCode {
   public:
    /// Throws std::invalid_argument on mismatched p/n or a non-orthogonal pair.
    CssCode(ClassicalCode cx, ClassicalCode cz);

    const ClassicalCode &cx() const {
        return cx_;
    }
    const ClassicalCode &cz() const {
        return cz_;
    }
    std::uint32_t p() const {
        return cx_.p();
    }
    std::size_t n() const {
        return cx_.n();
    }

   private:
    ClassicalCode cx_;
    ClassicalCode cz_;
};

/// Whether every generator pair of (cx, cz) has zero Euclidean product.
/// Throws std::invalid_argument when p or n differ.
bool validate_css(const ClassicalCode &cx, const ClassicalCode &cz);

/// Rows of C_Z as (z|0) followed by rows of C_X as (0|x).
StabilizerCode css_to_stabilizer(const CssCode &css);

struct CssPlan {
    ErasurePattern erasures;
    FpMatrix dx;
    FpMatrix dz;
    /// Bases of C_X ∩ F_p^Ī and C_Z ∩ F_p^Ī.
    FpMatrix residual_x;
    FpMatrix residual_z;
    std::vector<std::size_t> supp_x;
    std::vector<std::size_t> supp_z;

    std::size_t dim() const {
        return dx.rows() + dz.rows();
    }
};

/// Per-sector plans C_i = D_i + (C_i ∩ F_p^Ī) with D_i ∩ F_p^Ī = {0}.
/// Throws NotCorrectableError when the induced stabilizer code cannot
/// correct the pattern.
CssPlan plan_css(const CssCode &css, const ErasurePattern &erasures);

/// The plan as stabilizer observables in the layout of css_to_stabilizer:
/// dz rows as (z|0), then dx rows as (0|x).
FpMatrix css_plan_observables(const CssPlan &plan);

/// Lifts classical rows into F_p^{2n}, into the a half (`x_half`) or b half.
FpMatrix lift_rows(const FpMatrix &rows, bool x_half);

/// 0-based positions where some row is nonzero.
std::vector<std::size_t> classical_support(const FpMatrix &rows);

}  // namespace qlr

#endif
