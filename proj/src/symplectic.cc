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

#include "qlr/symplectic.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlr {

PauliVector::PauliVector(std::uint32_t p, std::size_t n) : field_(p), data_(2 * n, 0) {
}

PauliVector::PauliVector(PrimeField field, std::vector<fp_t> packed) : field_(field), data_(std::move(packed)) {
    if (data_.size() % 2) {
        throw std::invalid_argument("Pauli vector needs an even number of entries");
    }
    for (fp_t &v : data_) {
        v %= field_.prime();
    }
}

PauliVector PauliVector::from_parts(
    std::uint32_t p, std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("X and Z parts have different lengths");
    }
    PrimeField f(p);
    std::vector<fp_t> packed;
    packed.reserve(2 * a.size());
    for (auto v : a) {
        packed.push_back(f.reduce(v));
    }
    for (auto v : b) {
        packed.push_back(f.reduce(v));
    }
    return PauliVector(f, std::move(packed));
}

PauliVector PauliVector::parse(std::uint32_t p, const std::string &text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    auto bar = body.find('|');
    if (bar == std::string::npos) {
        throw std::invalid_argument("expected '(a|b)' but got '" + text + "'");
    }
    auto parse_half = [&](const std::string &half) {
        std::vector<std::int64_t> out;
        if (p > 10 || half.find(',') != std::string::npos) {
            std::stringstream ss(half);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) {
                    out.push_back(std::stoll(item));
                }
            }
        } else {
            for (char ch : half) {
                if (ch < '0' || ch > '9') {
                    throw std::invalid_argument("bad digit in '" + text + "'");
                }
                out.push_back(ch - '0');
            }
        }
        return out;
    };
    auto a = parse_half(body.substr(0, bar));
    auto b = parse_half(body.substr(bar + 1));
    return from_parts(p, a, b);
}

bool PauliVector::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](fp_t v) { return v == 0; });
}

std::string PauliVector::str() const {
    std::stringstream ss;
    bool wide = p() > 10;
    ss << '(';
    for (std::size_t i = 0; i < data_.size(); i++) {
        if (i == n()) {
            ss << '|';
        } else if (wide && i != 0) {
            ss << ',';
        }
        ss << data_[i];
    }
    ss << ')';
    return ss.str();
}

ErasurePattern::ErasurePattern(std::size_t n, std::vector<std::size_t> zero_based)
    : n_(n), indices_(std::move(zero_based)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("duplicate erasure position");
    }
    if (!indices_.empty() && indices_.back() >= n_) {
        throw std::invalid_argument(
            "erasure position " + std::to_string(indices_.back() + 1) + " exceeds n = " + std::to_string(n_));
    }
}

ErasurePattern ErasurePattern::from_one_based(std::size_t n, const std::vector<std::size_t> &one_based) {
    std::vector<std::size_t> z;
    z.reserve(one_based.size());
    for (std::size_t i : one_based) {
        if (i == 0) {
            throw std::invalid_argument("erasure positions are 1-based; got 0");
        }
        z.push_back(i - 1);
    }
    return ErasurePattern(n, std::move(z));
}

ErasurePattern ErasurePattern::all(std::size_t n) {
    std::vector<std::size_t> z(n);
    for (std::size_t i = 0; i < n; i++) {
        z[i] = i;
    }
    return ErasurePattern(n, std::move(z));
}

std::vector<std::size_t> ErasurePattern::one_based() const {
    std::vector<std::size_t> out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_) {
        out.push_back(i + 1);
    }
    return out;
}

bool ErasurePattern::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

ErasurePattern ErasurePattern::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n_; i++) {
        if (!contains(i)) {
            rest.push_back(i);
        }
    }
    return ErasurePattern(n_, std::move(rest));
}

std::vector<std::size_t> ErasurePattern::symplectic_columns() const {
    std::vector<std::size_t> cols = indices_;
    for (std::size_t i : indices_) {
        cols.push_back(n_ + i);
    }
    return cols;
}

fp_t symp_product(const PrimeField &field, std::span<const fp_t> x, std::span<const fp_t> y) {
    if (x.size() != y.size() || x.size() % 2) {
        throw std::invalid_argument("symplectic product needs equal even-length vectors");
    }
    const std::size_t n = x.size() / 2;
    fp_t acc = 0;
    for (std::size_t i = 0; i < n; i++) {
        acc = field.add(acc, field.mul(x[i], y[n + i]));
        acc = field.sub(acc, field.mul(y[i], x[n + i]));
    }
    return acc;
}

fp_t symp_product(const PauliVector &x, const PauliVector &y) {
    if (x.p() != y.p()) {
        throw std::invalid_argument("modulus mismatch");
    }
    if (x.n() != y.n()) {
        throw std::invalid_argument("qudit count mismatch");
    }
    return symp_product(x.field(), x.data(), y.data());
}

FpMatrix apply_symplectic_form(const FpMatrix &c) {
    if (c.cols() % 2) {
        throw std::invalid_argument("symplectic space needs an even column count");
    }
    const std::size_t n = c.cols() / 2;
    FpMatrix out(c.field(), c.rows(), c.cols());
    for (std::size_t r = 0; r < c.rows(); r++) {
        auto src = c.row(r);
        auto dst = out.mutable_row(r);
        for (std::size_t i = 0; i < n; i++) {
            dst[i] = src[n + i];
            dst[n + i] = c.field().neg(src[i]);
        }
    }
    return out;
}

FpMatrix symp_dual(const FpMatrix &c) {
    return kernel_basis(apply_symplectic_form(c));
}

std::vector<std::size_t> support(std::span<const fp_t> packed) {
    const std::size_t n = packed.size() / 2;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; i++) {
        if (packed[i] || packed[n + i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> support(const PauliVector &x) {
    return support(x.data());
}

std::vector<std::size_t> support_of_rows(const FpMatrix &m) {
    const std::size_t n = m.cols() / 2;
    std::vector<char> hit(n, 0);
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t i : support(m.row(r))) {
            hit[i] = 1;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; i++) {
        if (hit[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t symp_weight(std::span<const fp_t> packed) {
    return support(packed).size();
}

std::size_t symp_weight(const PauliVector &x) {
    return symp_weight(x.data());
}

std::vector<fp_t> project(std::span<const fp_t> packed, const ErasurePattern &erasures) {
    if (packed.size() != 2 * erasures.n()) {
        throw std::invalid_argument("projection: vector length does not match the erasure pattern");
    }
    const std::size_t n = erasures.n();
    const std::size_t k = erasures.size();
    std::vector<fp_t> out(2 * k);
    for (std::size_t j = 0; j < k; j++) {
        out[j] = packed[erasures.indices()[j]];
        out[k + j] = packed[n + erasures.indices()[j]];
    }
    return out;
}

PauliVector project(const PauliVector &x, const ErasurePattern &erasures) {
    return PauliVector(x.field(), project(x.data(), erasures));
}

FpMatrix project(const FpMatrix &c, const ErasurePattern &erasures) {
    FpMatrix out(c.field(), 0, 2 * erasures.size());
    for (std::size_t r = 0; r < c.rows(); r++) {
        out.append_row(project(c.row(r), erasures));
    }
    return out;
}

FpMatrix restrict_to_coords(const FpMatrix &c, const ErasurePattern &erasures) {
    if (c.cols() != 2 * erasures.n()) {
        throw std::invalid_argument("restriction: column count does not match the erasure pattern");
    }
    // Reduce with the columns outside I first; what avoids them lives on I.
    return split_on_columns(c, erasures.complement().symplectic_columns()).avoiding;
}

PauliVector embed(const PrimeField &field, std::span<const fp_t> local, const ErasurePattern &erasures) {
    const std::size_t k = erasures.size();
    if (local.size() != 2 * k) {
        throw std::invalid_argument("embed: local vector has the wrong length");
    }
    std::vector<fp_t> packed(2 * erasures.n(), 0);
    for (std::size_t j = 0; j < k; j++) {
        packed[erasures.indices()[j]] = local[j];
        packed[erasures.n() + erasures.indices()[j]] = local[k + j];
    }
    return PauliVector(field, std::move(packed));
}

}  // namespace qlr
