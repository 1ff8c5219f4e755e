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

#include "generators.h"

#include <algorithm>
#include <numeric>

#include "qlr/io.h"

namespace qlr::testing {

std::string data_path(const std::string &name) {
    return std::string(QLR_DATA_DIR) + "/" + name;
}

FpMatrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, Rng &rng) {
    std::uniform_int_distribution<fp_t> dist(0, p - 1);
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            m.set(r, c, dist(rng));
        }
    }
    return m;
}

namespace {

FpMatrix random_invertible(std::uint32_t p, std::size_t k, Rng &rng) {
    while (true) {
        FpMatrix m = random_matrix(p, k, k, rng);
        if (rank(m) == k) {
            return m;
        }
    }
}

FpMatrix multiply(const FpMatrix &a, const FpMatrix &b) {
    const PrimeField &f = a.field();
    FpMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            fp_t x = a(i, k);
            if (x == 0) {
                continue;
            }
            auto brow = b.row(k);
            auto orow = out.mutable_row(i);
            for (std::size_t j = 0; j < b.cols(); j++) {
                orow[j] = f.add(orow[j], f.mul(x, brow[j]));
            }
        }
    }
    return out;
}

}  // namespace

StabilizerCode random_stabilizer_code(std::uint32_t p, std::size_t n, std::size_t dim, Rng &rng) {
    PrimeField f(p);
    FpMatrix c(f, dim, 2 * n);
    for (std::size_t i = 0; i < dim; i++) {
        c.set(i, n + i, 1);
    }
    std::uniform_int_distribution<fp_t> dist(0, p - 1);
    std::uniform_int_distribution<std::size_t> pos(0, 2 * n - 1);
    std::vector<fp_t> v(2 * n);
    const std::size_t rounds = 3 * n + 4;
    for (std::size_t t = 0; t < rounds; t++) {
        // Sparse-ish transvection vectors keep small instances varied; the
        // dense tail stops large codes from keeping weight-1 logicals.
        std::fill(v.begin(), v.end(), 0);
        if (t + n < rounds) {
            std::size_t nnz = 1 + pos(rng) % 4;
            for (std::size_t j = 0; j < nnz; j++) {
                v[pos(rng)] = dist(rng);
            }
        } else {
            std::generate(v.begin(), v.end(), [&] { return dist(rng); });
        }
        fp_t scale = 1 + dist(rng) % (p - 1 ? p - 1 : 1);
        for (std::size_t r = 0; r < dim; r++) {
            auto row = c.mutable_row(r);
            fp_t s = f.mul(scale, symp_product(f, row, v));
            if (s == 0) {
                continue;
            }
            for (std::size_t j = 0; j < 2 * n; j++) {
                row[j] = f.add(row[j], f.mul(s, v[j]));
            }
        }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> cols;
    for (std::size_t i : perm) {
        cols.push_back(i);
    }
    for (std::size_t i : perm) {
        cols.push_back(n + i);
    }
    FpMatrix permuted = c.select_cols(cols);
    if (dim == 0) {
        return StabilizerCode(permuted);
    }
    return StabilizerCode(multiply(random_invertible(p, dim, rng), permuted));
}

FpMatrix random_subspace_of(const FpMatrix &basis, std::size_t count, Rng &rng) {
    if (basis.rows() == 0) {
        return FpMatrix(basis.field(), 0, basis.cols());
    }
    return multiply(random_matrix(basis.p(), count, basis.rows(), rng), basis);
}

ErasurePattern random_pattern(std::size_t n, std::size_t size, Rng &rng) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(size, n));
    return ErasurePattern(n, all);
}

CssCode random_css_code(std::size_t n, std::size_t dim_z, std::size_t dim_x, Rng &rng) {
    while (true) {
        FpMatrix z = random_matrix(2, dim_z, n, rng);
        if (rank(z) != dim_z) {
            continue;
        }
        FpMatrix dual = kernel_basis(z);
        if (dual.rows() < dim_x) {
            continue;
        }
        FpMatrix x = random_subspace_of(dual, dim_x, rng);
        if (rank(x) != dim_x) {
            continue;
        }
        return CssCode(ClassicalCode(x), ClassicalCode(z));
    }
}

Surface torus(std::size_t l1, std::size_t l2) {
    auto p = [&](std::size_t x, std::size_t y) {
        return "p" + std::to_string(x % l1) + "_" + std::to_string(y % l2);
    };
    auto h = [&](std::size_t x, std::size_t y) {
        return "h" + std::to_string(x % l1) + "_" + std::to_string(y % l2);
    };
    auto v = [&](std::size_t x, std::size_t y) {
        return "v" + std::to_string(x % l1) + "_" + std::to_string(y % l2);
    };
    std::vector<std::string> verts;
    std::vector<SurfaceEdge> edges;
    std::vector<SurfaceFace> faces;
    for (std::size_t y = 0; y < l2; y++) {
        for (std::size_t x = 0; x < l1; x++) {
            verts.push_back(p(x, y));
            edges.push_back({h(x, y), {p(x, y), p(x + 1, y)}});
            edges.push_back({v(x, y), {p(x, y), p(x, y + 1)}});
            faces.push_back(
                {"f" + std::to_string(x) + "_" + std::to_string(y), {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}});
        }
    }
    return Surface(verts, edges, faces);
}

Surface planar_patch(std::size_t w, std::size_t hgt, const std::vector<std::string> &open) {
    auto p = [](std::size_t x, std::size_t y) { return "p" + std::to_string(x) + "_" + std::to_string(y); };
    auto h = [](std::size_t x, std::size_t y) { return "h" + std::to_string(x) + "_" + std::to_string(y); };
    auto v = [](std::size_t x, std::size_t y) { return "v" + std::to_string(x) + "_" + std::to_string(y); };
    std::vector<std::string> verts;
    std::vector<SurfaceEdge> edges;
    std::vector<SurfaceFace> faces;
    for (std::size_t y = 0; y <= hgt; y++) {
        for (std::size_t x = 0; x <= w; x++) {
            verts.push_back(p(x, y));
            if (x < w) {
                edges.push_back({h(x, y), {p(x, y), p(x + 1, y)}});
            }
            if (y < hgt) {
                edges.push_back({v(x, y), {p(x, y), p(x, y + 1)}});
            }
        }
    }
    for (std::size_t y = 0; y < hgt; y++) {
        for (std::size_t x = 0; x < w; x++) {
            faces.push_back(
                {"f" + std::to_string(x) + "_" + std::to_string(y), {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}});
        }
    }
    return Surface(verts, edges, faces, open);
}

std::vector<std::string> patch_boundary(std::size_t w, std::size_t hgt) {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < w; x++) {
        out.push_back("h" + std::to_string(x) + "_0");
        out.push_back("h" + std::to_string(x) + "_" + std::to_string(hgt));
    }
    for (std::size_t y = 0; y < hgt; y++) {
        out.push_back("v0_" + std::to_string(y));
        out.push_back("v" + std::to_string(w) + "_" + std::to_string(y));
    }
    return out;
}

Surface fig1_surface() {
    return load_surface(data_path("fig1.json"));
}

Surface square_surface() {
    return load_surface(data_path("square.json"));
}

StabilizerCode bell_code() {
    return StabilizerCode(FpMatrix::from_rows(2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
}

StabilizerCode c422_code() {
    return StabilizerCode(FpMatrix::from_rows(2, {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}}));
}

}  // namespace qlr::testing
