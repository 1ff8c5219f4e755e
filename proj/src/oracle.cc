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

#include "qlr/oracle.h"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "qlr/errors.h"

namespace qlr::oracle {

namespace {

using MaskSet = std::array<std::uint64_t, 2>;  // subsets of {0..127}

std::size_t checked_power(std::uint64_t p, std::size_t e, const char *what) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; i++) {
        out *= p;
        if (out > kMaxEnumeration) {
            throw SizeLimitError(std::string(what) + ": more than 2^20 candidates");
        }
    }
    return static_cast<std::size_t>(out);
}

fp_t symp(std::uint64_t p, const Vec &x, const Vec &y) {
    const std::size_t n = x.size() / 2;
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    for (std::size_t i = 0; i < n; i++) {
        plus = (plus + std::uint64_t{x[i]} * y[n + i]) % p;
        minus = (minus + std::uint64_t{y[i]} * x[n + i]) % p;
    }
    return static_cast<fp_t>((plus + p - minus) % p);
}

std::size_t weight(const Vec &x) {
    const std::size_t n = x.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; i++) {
        w += (x[i] || x[n + i]);
    }
    return w;
}

Vec row_of(const FpMatrix &m, std::size_t r) {
    auto s = m.row(r);
    return Vec(s.begin(), s.end());
}

// Positions in F_p^{2n} owned by the qudits of `pattern`: a halves then b halves.
std::vector<std::size_t> owned_positions(const ErasurePattern &pattern) {
    std::vector<std::size_t> pos;
    for (std::size_t i : pattern.indices()) {
        pos.push_back(i);
    }
    for (std::size_t i : pattern.indices()) {
        pos.push_back(pattern.n() + i);
    }
    return pos;
}

// Every vector of F_p^{2n} supported on `pattern`, last position fastest.
std::vector<Vec> all_supported_on(std::uint32_t p, const ErasurePattern &pattern) {
    std::vector<std::size_t> pos = owned_positions(pattern);
    std::size_t count = checked_power(p, pos.size(), "vectors on the erased coordinates");
    std::vector<Vec> out;
    out.reserve(count);
    Vec v(2 * pattern.n(), 0);
    for (std::size_t idx = 0; idx < count; idx++) {
        std::size_t t = idx;
        for (std::size_t j = pos.size(); j-- > 0;) {
            v[pos[j]] = static_cast<fp_t>(t % p);
            t /= p;
        }
        out.push_back(v);
    }
    return out;
}

bool supported_on(const Vec &x, const ErasurePattern &pattern) {
    const std::size_t n = x.size() / 2;
    for (std::size_t i = 0; i < n; i++) {
        if ((x[i] || x[n + i]) && !pattern.contains(i)) {
            return false;
        }
    }
    return true;
}

std::set<Vec> element_set(const FpMatrix &rows) {
    auto elems = span_elements(rows);
    return std::set<Vec>(elems.begin(), elems.end());
}

bool orthogonal_to_all(std::uint64_t p, const Vec &x, const std::vector<Vec> &rows) {
    return std::all_of(rows.begin(), rows.end(), [&](const Vec &r) { return symp(p, r, x) == 0; });
}

std::vector<Vec> rows_of(const FpMatrix &m) {
    std::vector<Vec> out;
    for (std::size_t r = 0; r < m.rows(); r++) {
        out.push_back(row_of(m, r));
    }
    return out;
}

bool has(const MaskSet &s, std::size_t i) {
    return s[i >> 6] >> (i & 63) & 1u;
}

void put(MaskSet &s, std::size_t i) {
    s[i >> 6] |= std::uint64_t{1} << (i & 63);
}

bool subset_of(const MaskSet &a, const MaskSet &b) {
    return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0;
}

// For a binary code with dim C = k ≤ 7, element `mask` of C is the sum of the
// generators whose bit is set. For each bad vector x, `orth` holds the masks
// of the elements orthogonal to x; a subspace D (as a mask set) admits x into
// D^⊥ iff D ⊆ orth(x). Returns the smallest dimension of a subspace admitting
// no bad vector, searching subspaces level by level via XOR closure.
std::size_t min_subspace_avoiding(std::size_t k, const std::vector<MaskSet> &orth) {
    const std::size_t size = std::size_t{1} << k;
    auto ok = [&](const MaskSet &d) {
        return std::none_of(orth.begin(), orth.end(), [&](const MaskSet &o) { return subset_of(d, o); });
    };
    std::set<MaskSet> level;
    MaskSet zero{0, 0};
    put(zero, 0);
    level.insert(zero);
    for (std::size_t t = 0; t <= k; t++) {
        for (const MaskSet &d : level) {
            if (ok(d)) {
                return t;
            }
        }
        std::set<MaskSet> next;
        for (const MaskSet &d : level) {
            for (std::size_t c = 1; c < size; c++) {
                if (has(d, c)) {
                    continue;
                }
                MaskSet e = d;
                for (std::size_t s = 0; s < size; s++) {
                    if (has(d, s)) {
                        put(e, s ^ c);
                    }
                }
                next.insert(e);
            }
        }
        level = std::move(next);
    }
    throw UndefinedMinimumError("no subspace of C qualifies");
}

MaskSet orth_masks(std::uint64_t p, const std::vector<Vec> &elems, const Vec &x) {
    MaskSet o{0, 0};
    for (std::size_t m = 0; m < elems.size(); m++) {
        if (symp(p, elems[m], x) == 0) {
            put(o, m);
        }
    }
    return o;
}

void require_binary_small(const StabilizerCode &code, const char *what) {
    if (code.p() != 2 || code.dim() > 7) {
        throw SizeLimitError(std::string(what) + " is limited to p = 2 and dim C <= 7");
    }
}

}  // namespace

std::vector<Vec> span_elements(const FpMatrix &rows) {
    const std::uint32_t p = rows.p();
    std::size_t count = checked_power(p, rows.rows(), "span enumeration");
    std::vector<Vec> out;
    out.reserve(count);
    std::vector<fp_t> coeff(rows.rows(), 0);
    for (std::size_t idx = 0; idx < count; idx++) {
        std::size_t t = idx;
        for (std::size_t j = 0; j < rows.rows(); j++) {
            coeff[j] = static_cast<fp_t>(t % p);
            t /= p;
        }
        Vec v(rows.cols(), 0);
        for (std::size_t j = 0; j < rows.rows(); j++) {
            if (coeff[j] == 0) {
                continue;
            }
            for (std::size_t c = 0; c < rows.cols(); c++) {
                v[c] = static_cast<fp_t>((v[c] + std::uint64_t{coeff[j]} * rows(j, c)) % p);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> restricted_elements(const StabilizerCode &code, const ErasurePattern &erasures) {
    std::set<Vec> out;
    for (const Vec &x : span_elements(code.generators())) {
        if (supported_on(x, erasures)) {
            out.insert(x);
        }
    }
    return std::vector<Vec>(out.begin(), out.end());
}

std::map<Syndrome, std::vector<Vec>> syndrome_classes(const FpMatrix &observables, const ErasurePattern &erasures) {
    const std::uint32_t p = observables.p();
    std::vector<Vec> rows = rows_of(observables);
    std::map<Syndrome, std::vector<Vec>> out;
    for (Vec &e : all_supported_on(p, erasures)) {
        Syndrome s;
        for (const Vec &r : rows) {
            s.push_back(symp(p, r, e));
        }
        out[s].push_back(std::move(e));
    }
    return out;
}

std::vector<Vec> brute_decode(
    const StabilizerCode &code, const ErasurePattern &erasures, const FpMatrix &observables, const Syndrome &syndrome) {
    if (syndrome.size() != observables.rows()) {
        throw std::invalid_argument("syndrome length does not match the observables");
    }
    const std::uint32_t p = code.p();
    std::vector<Vec> rows = rows_of(observables);
    std::vector<Vec> out;
    for (Vec &e : all_supported_on(p, erasures)) {
        bool match = true;
        for (std::size_t i = 0; i < rows.size() && match; i++) {
            match = symp(p, rows[i], e) == syndrome[i];
        }
        if (match) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

bool brute_correctable(const StabilizerCode &code, const ErasurePattern &erasures) {
    return brute_verify_plan(code, code.generators(), erasures);
}

bool brute_verify_plan(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures) {
    const std::uint32_t p = code.p();
    std::set<Vec> c = element_set(code.generators());
    std::vector<Vec> d = rows_of(observables);
    for (const Vec &x : all_supported_on(p, erasures)) {
        bool in_c = c.count(x) > 0;
        bool in_d_perp = orthogonal_to_all(p, x, d);
        if (in_c != in_d_perp) {
            return false;
        }
    }
    return true;
}

bool brute_decomposes(const StabilizerCode &code, const FpMatrix &observables, const ErasurePattern &erasures) {
    const std::uint32_t p = code.p();
    std::set<Vec> c = element_set(code.generators());
    std::vector<Vec> residual = restricted_elements(code, erasures.complement());
    std::set<Vec> sum;
    for (const Vec &d : span_elements(observables)) {
        for (const Vec &r : residual) {
            Vec v(d.size());
            for (std::size_t i = 0; i < v.size(); i++) {
                v[i] = static_cast<fp_t>((d[i] + r[i]) % p);
            }
            sum.insert(std::move(v));
        }
    }
    return sum == c;
}

std::size_t brute_min_D(const StabilizerCode &code, const ErasurePattern &erasures) {
    require_binary_small(code, "brute_min_D");
    std::vector<Vec> elems = span_elements(code.generators());
    std::set<Vec> c(elems.begin(), elems.end());
    MaskSet full{0, 0};
    for (std::size_t m = 0; m < elems.size(); m++) {
        put(full, m);
    }
    std::set<MaskSet> orth;
    for (const Vec &x : all_supported_on(2, erasures)) {
        if (c.count(x)) {
            continue;
        }
        MaskSet o = orth_masks(2, elems, x);
        if (o == full) {
            throw UndefinedMinimumError("the erasure pattern is not correctable, so no plan exists");
        }
        orth.insert(o);
    }
    return min_subspace_avoiding(code.dim(), std::vector<MaskSet>(orth.begin(), orth.end()));
}

std::size_t brute_min_fixed_set(const StabilizerCode &code, std::size_t delta) {
    require_binary_small(code, "brute_min_fixed_set");
    if (code.n() > 8) {
        throw SizeLimitError("brute_min_fixed_set is limited to n <= 8");
    }
    std::vector<Vec> elems = span_elements(code.generators());
    std::set<Vec> c(elems.begin(), elems.end());
    MaskSet full{0, 0};
    for (std::size_t m = 0; m < elems.size(); m++) {
        put(full, m);
    }
    std::set<MaskSet> orth;
    for (const Vec &x : all_supported_on(2, ErasurePattern::all(code.n()))) {
        std::size_t w = weight(x);
        if (w == 0 || w > delta || c.count(x)) {
            continue;
        }
        MaskSet o = orth_masks(2, elems, x);
        if (o == full) {
            throw UndefinedMinimumError("C^perp \\ C has a vector of weight <= delta");
        }
        orth.insert(o);
    }
    return min_subspace_avoiding(code.dim(), std::vector<MaskSet>(orth.begin(), orth.end()));
}

std::optional<std::size_t> brute_residual_distance(const StabilizerCode &code, const ErasurePattern &erasures) {
    const std::uint32_t p = code.p();
    ErasurePattern rest = erasures.complement();
    std::vector<Vec> residual = restricted_elements(code, rest);
    std::set<Vec> r(residual.begin(), residual.end());
    std::optional<std::size_t> best;
    for (const Vec &x : all_supported_on(p, rest)) {
        if (r.count(x) || !orthogonal_to_all(p, x, residual)) {
            continue;
        }
        std::size_t w = weight(x);
        if (!best || w < *best) {
            best = w;
        }
    }
    return best;
}

}  // namespace qlr::oracle
