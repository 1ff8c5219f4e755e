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

#ifndef QLR_FP_MATRIX_H
#define QLR_FP_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qlr {

/// An element of a prime field, always stored reduced into [0, p).
using fp_t = std::uint32_t;

/// Arithmetic in F_p. Construction rejects composite moduli.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t prime() const {
        return p_;
    }

    fp_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<fp_t>(r < 0 ? r + p_ : r);
    }
    fp_t add(fp_t a, fp_t b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<fp_t>(s >= p_ ? s - p_ : s);
    }
    fp_t sub(fp_t a, fp_t b) const {
        return a >= b ? a - b : static_cast<fp_t>(std::uint64_t{a} + p_ - b);
    }
    fp_t neg(fp_t a) const {
        return a == 0 ? 0 : p_ - a;
    }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>((std::uint64_t{a} * b) % p_);
    }
    /// Multiplicative inverse; `a` must be nonzero.
    fp_t inv(fp_t a) const;

    bool operator==(const PrimeField &other) const = default;

   private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

/// Dense row-major matrix over F_p.
///
/// A matrix with zero rows is a valid value: it is how the trivial subspace
/// is represented, so every "basis of a subspace" result in this library is a
/// matrix of shape dim x cols, including dim == 0.
class FpMatrix {
   public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    /// Builds from integer rows, reducing every entry mod p. All rows must
    /// have length `cols`.
    static FpMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<std::vector<std::int64_t>> &rows);
    static FpMatrix from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static FpMatrix identity(std::uint32_t p, std::size_t n);

    const PrimeField &field() const {
        return field_;
    }
    std::uint32_t p() const {
        return field_.prime();
    }
    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_ == 0;
    }

    fp_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, fp_t v);

    std::span<const fp_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<fp_t> mutable_row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }

    /// Appends a row whose entries must already be reduced.
    void append_row(std::span<const fp_t> values);
    FpMatrix select_rows(std::span<const std::size_t> indices) const;
    FpMatrix select_cols(std::span<const std::size_t> indices) const;
    FpMatrix transpose() const;
    /// Matrix-vector product M x.
    std::vector<fp_t> apply(std::span<const fp_t> x) const;

    bool operator==(const FpMatrix &other) const = default;

    std::string str() const;

   private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<fp_t> data_;
};

/// Stacks rows of `top` above rows of `bottom`. Shapes and moduli must agree.
FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom);

/// Reduced row echelon form computed under a column permutation.
///
/// `rref` keeps the original column layout; it is in reduced echelon form
/// when its columns are read in `col_order`. Only the `rank` nonzero rows are
/// kept. `pivot_cols[i]` is the original index of row i's pivot column, and
/// `pivot_rows[i]` is the input row that was selected when that pivot was
/// found. Pivot rows are chosen as the lowest-indexed eligible input row, so
/// the input rows listed in `pivot_rows[0..j)` span the same space as the
/// first j rows of the echelon form at the time the j-th pivot was placed.
struct RrefResult {
    FpMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> col_order;

    std::size_t rank() const {
        return pivot_cols.size();
    }
};

RrefResult rref(const FpMatrix &m);
RrefResult rref(const FpMatrix &m, std::span<const std::size_t> col_order);

std::size_t rank(const FpMatrix &m);

/// Rows form a basis of {x : M x^T = 0}, one per free column, ascending.
FpMatrix kernel_basis(const FpMatrix &m);

/// Canonical (RREF) basis of rowspace(a) + rowspace(b).
FpMatrix space_sum(const FpMatrix &a, const FpMatrix &b);

/// Canonical (RREF) basis of rowspace(a) ∩ rowspace(b).
FpMatrix space_intersection(const FpMatrix &a, const FpMatrix &b);

/// Canonical (RREF) basis of rowspace(m).
FpMatrix row_basis(const FpMatrix &m);

bool row_space_contains(const FpMatrix &m, std::span<const fp_t> v);
bool same_row_space(const FpMatrix &a, const FpMatrix &b);

/// Some x with M x = s, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<fp_t>> solve_linear(const FpMatrix &m, std::span<const fp_t> s);

/// Splits a row space by how it meets a set of priority columns.
///
/// The matrix is reduced with `priority` columns (ascending) moved in front
/// of all other columns. Rows whose pivot lies among the priority columns
/// form `touching`; the remaining rows form `avoiding`, which is a basis of
/// the subspace vanishing on every priority column. No nonzero vector of
/// span(touching) vanishes on all priority columns.
struct ColumnSplit {
    FpMatrix touching;
    FpMatrix avoiding;
};
ColumnSplit split_on_columns(const FpMatrix &m, std::span<const std::size_t> priority);

}  // namespace qlr

#endif
