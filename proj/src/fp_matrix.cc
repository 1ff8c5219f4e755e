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

#include "qlr/fp_matrix.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qlr {

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; d++) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a supported prime");
    }
}

fp_t PrimeField::inv(fp_t a) const {
    if (a == 0) {
        throw std::domain_error("zero has no inverse");
    }
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p_ - 2;
    while (e) {
        if (e & 1) {
            result = result * base % p_;
        }
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<fp_t>(result);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : FpMatrix(PrimeField(p), rows, cols) {
}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

FpMatrix FpMatrix::from_rows(
    std::uint32_t p, std::size_t cols, const std::vector<std::vector<std::int64_t>> &rows) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument(
                "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) + ", expected " +
                std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; c++) {
            m.data_[r * cols + c] = m.field_.reduce(rows[r][c]);
        }
    }
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (const auto &r : rows) {
        v.emplace_back(r);
    }
    std::size_t cols = v.empty() ? 0 : v.front().size();
    return from_rows(p, cols, v);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.data_[i * n + i] = 1;
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, fp_t v) {
    data_[r * cols_ + c] = v % field_.prime();
}

void FpMatrix::append_row(std::span<const fp_t> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument("append_row: length mismatch");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    rows_++;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> indices) const {
    FpMatrix out(field_, 0, cols_);
    out.data_.reserve(indices.size() * cols_);
    for (std::size_t r : indices) {
        out.append_row(row(r));
    }
    return out;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> indices) const {
    FpMatrix out(field_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < indices.size(); k++) {
            out.data_[r * indices.size() + k] = data_[r * cols_ + indices[k]];
        }
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out.data_[c * rows_ + r] = data_[r * cols_ + c];
        }
    }
    return out;
}

std::vector<fp_t> FpMatrix::apply(std::span<const fp_t> x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("apply: vector length mismatch");
    }
    std::vector<fp_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; c++) {
            acc = (acc + std::uint64_t{data_[r * cols_ + c]} * x[c]) % field_.prime();
        }
        out[r] = static_cast<fp_t>(acc);
    }
    return out;
}

std::string FpMatrix::str() const {
    std::stringstream ss;
    for (std::size_t r = 0; r < rows_; r++) {
        ss << '[';
        for (std::size_t c = 0; c < cols_; c++) {
            if (c) {
                ss << ' ';
            }
            ss << data_[r * cols_ + c];
        }
        ss << "]\n";
    }
    return ss.str();
}

FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom) {
    if (top.p() != bottom.p()) {
        throw std::invalid_argument("modulus mismatch");
    }
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument(
            "column count mismatch: " + std::to_string(top.cols()) + " vs " + std::to_string(bottom.cols()));
    }
    FpMatrix out = top;
    for (std::size_t r = 0; r < bottom.rows(); r++) {
        out.append_row(bottom.row(r));
    }
    return out;
}

namespace {

struct Elimination {
    // Positions are indices into the permuted column order.
    std::vector<std::size_t> pivot_positions;
    std::vector<std::size_t> pivot_rows;
    // Reduced rows in permuted layout, one per pivot.
    std::vector<std::vector<fp_t>> rows;
};

Elimination eliminate_generic(const FpMatrix &m, std::span<const std::size_t> order) {
    const PrimeField &f = m.field();
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::vector<fp_t>> work(nr, std::vector<fp_t>(nc));
    for (std::size_t r = 0; r < nr; r++) {
        for (std::size_t k = 0; k < nc; k++) {
            work[r][k] = m(r, order[k]);
        }
    }
    std::vector<std::size_t> origin(nr);
    std::iota(origin.begin(), origin.end(), 0);

    Elimination out;
    std::size_t rank = 0;
    for (std::size_t pos = 0; pos < nc && rank < nr; pos++) {
        std::size_t best = nr;
        for (std::size_t i = rank; i < nr; i++) {
            if (work[i][pos] != 0 && (best == nr || origin[i] < origin[best])) {
                best = i;
            }
        }
        if (best == nr) {
            continue;
        }
        std::swap(work[best], work[rank]);
        std::swap(origin[best], origin[rank]);
        auto &piv = work[rank];
        fp_t scale = f.inv(piv[pos]);
        for (std::size_t k = pos; k < nc; k++) {
            piv[k] = f.mul(piv[k], scale);
        }
        for (std::size_t i = 0; i < nr; i++) {
            if (i == rank || work[i][pos] == 0) {
                continue;
            }
            fp_t factor = work[i][pos];
            auto &row = work[i];
            for (std::size_t k = pos; k < nc; k++) {
                if (piv[k]) {
                    row[k] = f.sub(row[k], f.mul(factor, piv[k]));
                }
            }
        }
        out.pivot_positions.push_back(pos);
        out.pivot_rows.push_back(origin[rank]);
        rank++;
    }
    work.resize(rank);
    out.rows = std::move(work);
    return out;
}

// F_2 path: rows are bit-packed in permuted column order and eliminated with
// word-wide XOR.
Elimination eliminate_binary(const FpMatrix &m, std::span<const std::size_t> order) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::uint64_t> bits(nr * words, 0);
    for (std::size_t r = 0; r < nr; r++) {
        auto src = m.row(r);
        std::uint64_t *dst = bits.data() + r * words;
        for (std::size_t k = 0; k < nc; k++) {
            dst[k >> 6] |= std::uint64_t{src[order[k]] & 1u} << (k & 63);
        }
    }
    auto bit = [&](std::size_t r, std::size_t k) {
        return (bits[r * words + (k >> 6)] >> (k & 63)) & 1u;
    };
    std::vector<std::size_t> origin(nr);
    std::iota(origin.begin(), origin.end(), 0);

    Elimination out;
    std::size_t rank = 0;
    for (std::size_t pos = 0; pos < nc && rank < nr; pos++) {
        std::size_t best = nr;
        for (std::size_t i = rank; i < nr; i++) {
            if (bit(i, pos) && (best == nr || origin[i] < origin[best])) {
                best = i;
            }
        }
        if (best == nr) {
            continue;
        }
        if (best != rank) {
            std::swap_ranges(
                bits.begin() + best * words, bits.begin() + (best + 1) * words, bits.begin() + rank * words);
            std::swap(origin[best], origin[rank]);
        }
        const std::size_t w0 = pos >> 6;
        const std::uint64_t *piv = bits.data() + rank * words;
        for (std::size_t i = 0; i < nr; i++) {
            if (i != rank && bit(i, pos)) {
                std::uint64_t *row = bits.data() + i * words;
                for (std::size_t w = w0; w < words; w++) {
                    row[w] ^= piv[w];
                }
            }
        }
        out.pivot_positions.push_back(pos);
        out.pivot_rows.push_back(origin[rank]);
        rank++;
    }
    out.rows.assign(rank, std::vector<fp_t>(nc, 0));
    for (std::size_t r = 0; r < rank; r++) {
        for (std::size_t k = 0; k < nc; k++) {
            out.rows[r][k] = static_cast<fp_t>(bit(r, k));
        }
    }
    return out;
}

void check_permutation(std::span<const std::size_t> order, std::size_t n) {
    if (order.size() != n) {
        throw std::invalid_argument("column order has wrong length");
    }
    std::vector<char> seen(n, 0);
    for (std::size_t c : order) {
        if (c >= n || seen[c]) {
            throw std::invalid_argument("column order is not a permutation");
        }
        seen[c] = 1;
    }
}

void check_compatible(const FpMatrix &a, const FpMatrix &b) {
    if (a.p() != b.p()) {
        throw std::invalid_argument("modulus mismatch");
    }
    if (a.cols() != b.cols()) {
        throw std::invalid_argument(
            "dimension mismatch: " + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) + " columns");
    }
}

}  // namespace

RrefResult rref(const FpMatrix &m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return rref(m, order);
}

RrefResult rref(const FpMatrix &m, std::span<const std::size_t> col_order) {
    check_permutation(col_order, m.cols());
    Elimination e = m.p() == 2 ? eliminate_binary(m, col_order) : eliminate_generic(m, col_order);
    RrefResult result{FpMatrix(m.field(), e.rows.size(), m.cols()), {}, std::move(e.pivot_rows), {}};
    result.col_order.assign(col_order.begin(), col_order.end());
    for (std::size_t r = 0; r < e.rows.size(); r++) {
        auto dst = result.rref.mutable_row(r);
        for (std::size_t k = 0; k < m.cols(); k++) {
            dst[col_order[k]] = e.rows[r][k];
        }
    }
    for (std::size_t pos : e.pivot_positions) {
        result.pivot_cols.push_back(col_order[pos]);
    }
    return result;
}

std::size_t rank(const FpMatrix &m) {
    return rref(m).rank();
}

FpMatrix kernel_basis(const FpMatrix &m) {
    const PrimeField &f = m.field();
    RrefResult r = rref(m);
    std::vector<std::size_t> pivot_of_col(m.cols(), m.rows());
    for (std::size_t i = 0; i < r.rank(); i++) {
        pivot_of_col[r.pivot_cols[i]] = i;
    }
    FpMatrix out(f, 0, m.cols());
    std::vector<fp_t> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); free++) {
        if (pivot_of_col[free] != m.rows()) {
            continue;
        }
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank(); i++) {
            v[r.pivot_cols[i]] = f.neg(r.rref(i, free));
        }
        out.append_row(v);
    }
    return out;
}

FpMatrix row_basis(const FpMatrix &m) {
    return rref(m).rref;
}

FpMatrix space_sum(const FpMatrix &a, const FpMatrix &b) {
    check_compatible(a, b);
    return row_basis(vstack(a, b));
}

FpMatrix space_intersection(const FpMatrix &a, const FpMatrix &b) {
    check_compatible(a, b);
    // A ∩ B = (A^⊥ + B^⊥)^⊥ under the Euclidean form.
    return row_basis(kernel_basis(vstack(kernel_basis(a), kernel_basis(b))));
}

bool row_space_contains(const FpMatrix &m, std::span<const fp_t> v) {
    FpMatrix single(m.field(), 0, m.cols());
    single.append_row(v);
    return rank(vstack(m, single)) == rank(m);
}

bool same_row_space(const FpMatrix &a, const FpMatrix &b) {
    check_compatible(a, b);
    return row_basis(a) == row_basis(b);
}

std::optional<std::vector<fp_t>> solve_linear(const FpMatrix &m, std::span<const fp_t> s) {
    if (s.size() != m.rows()) {
        throw std::invalid_argument("solve_linear: right-hand side length mismatch");
    }
    FpMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); r++) {
        auto dst = aug.mutable_row(r);
        std::copy(m.row(r).begin(), m.row(r).end(), dst.begin());
        dst[m.cols()] = s[r] % m.p();
    }
    RrefResult red = rref(aug);
    std::vector<fp_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < red.rank(); i++) {
        if (red.pivot_cols[i] == m.cols()) {
            return std::nullopt;
        }
        x[red.pivot_cols[i]] = red.rref(i, m.cols());
    }
    return x;
}

ColumnSplit split_on_columns(const FpMatrix &m, std::span<const std::size_t> priority) {
    std::vector<char> is_priority(m.cols(), 0);
    for (std::size_t c : priority) {
        if (c >= m.cols()) {
            throw std::invalid_argument("priority column out of range");
        }
        is_priority[c] = 1;
    }
    std::vector<std::size_t> order;
    order.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); c++) {
        if (is_priority[c]) {
            order.push_back(c);
        }
    }
    for (std::size_t c = 0; c < m.cols(); c++) {
        if (!is_priority[c]) {
            order.push_back(c);
        }
    }
    RrefResult red = rref(m, order);
    ColumnSplit out{FpMatrix(m.field(), 0, m.cols()), FpMatrix(m.field(), 0, m.cols())};
    for (std::size_t i = 0; i < red.rank(); i++) {
        bool touches = is_priority[red.pivot_cols[i]] != 0;
        (touches ? out.touching : out.avoiding).append_row(red.rref.row(i));
    }
    return out;
}

}  // namespace qlr
