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

#include "qlr/css.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qlr/errors.h"

namespace qlr {

ClassicalCode::ClassicalCode(FpMatrix generators) : generators_(std::move(generators)) {
    if (rank(generators_) != generators_.rows()) {
        throw std::invalid_argument("classical generators are linearly dependent");
    }
}

ClassicalCode ClassicalCode::from_spanning_set(const FpMatrix &rows) {
    std::vector<std::size_t> keep = rref(rows).pivot_rows;
    std::sort(keep.begin(), keep.end());
    return ClassicalCode(rows.select_rows(keep));
}

ClassicalCode ClassicalCode::zero(std::uint32_t p, std::size_t n) {
    return ClassicalCode(FpMatrix(p, 0, n));
}

bool validate_css(const ClassicalCode &cx, const ClassicalCode &cz) {
    if (cx.p() != cz.p()) {
        throw std::invalid_argument(
            "C_X is over F_" + std::to_string(cx.p()) + " but C_Z is over F_" + std::to_string(cz.p()));
    }
    if (cx.n() != cz.n()) {
        throw std::invalid_argument(
            "C_X has length " + std::to_string(cx.n()) + " but C_Z has length " + std::to_string(cz.n()));
    }
    const PrimeField &f = cx.field();
    for (std::size_t i = 0; i < cz.dim(); i++) {
        auto z = cz.generators().row(i);
        for (std::size_t j = 0; j < cx.dim(); j++) {
            auto x = cx.generators().row(j);
            fp_t acc = 0;
            for (std::size_t c = 0; c < z.size(); c++) {
                acc = f.add(acc, f.mul(z[c], x[c]));
            }
            if (acc != 0) {
                return false;
            }
        }
    }
    return true;
}

CssCode::CssCode(ClassicalCode cx, ClassicalCode cz) : cx_(std::move(cx)), cz_(std::move(cz)) {
    if (!validate_css(cx_, cz_)) {
        throw std::invalid_argument("C_Z and C_X are not Euclidean-orthogonal");
    }
}

FpMatrix lift_rows(const FpMatrix &rows, bool x_half) {
    const std::size_t n = rows.cols();
    FpMatrix out(rows.field(), rows.rows(), 2 * n);
    for (std::size_t r = 0; r < rows.rows(); r++) {
        auto src = rows.row(r);
        auto dst = out.mutable_row(r);
        std::copy(src.begin(), src.end(), dst.begin() + (x_half ? 0 : n));
    }
    return out;
}

std::vector<std::size_t> classical_support(const FpMatrix &rows) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < rows.cols(); c++) {
        for (std::size_t r = 0; r < rows.rows(); r++) {
            if (rows(r, c)) {
                out.push_back(c);
                break;
            }
        }
    }
    return out;
}

StabilizerCode css_to_stabilizer(const CssCode &css) {
    return StabilizerCode(vstack(lift_rows(css.cz().generators(), true), lift_rows(css.cx().generators(), false)));
}

CssPlan plan_css(const CssCode &css, const ErasurePattern &erasures) {
    if (erasures.n() != css.n()) {
        throw std::invalid_argument("erasure pattern length does not match the code");
    }
    if (auto w = correctability_witness(css_to_stabilizer(css), erasures)) {
        throw NotCorrectableError("erasures are not correctable: " + w->str() + " is undetectable", *w);
    }
    ColumnSplit x = split_on_columns(css.cx().generators(), erasures.indices());
    ColumnSplit z = split_on_columns(css.cz().generators(), erasures.indices());
    std::vector<std::size_t> supp_x = classical_support(x.touching);
    std::vector<std::size_t> supp_z = classical_support(z.touching);
    return CssPlan{
        erasures,
        std::move(x.touching),
        std::move(z.touching),
        std::move(x.avoiding),
        std::move(z.avoiding),
        std::move(supp_x),
        std::move(supp_z)};
}

FpMatrix css_plan_observables(const CssPlan &plan) {
    return vstack(lift_rows(plan.dz, true), lift_rows(plan.dx, false));
}

}  // namespace qlr
