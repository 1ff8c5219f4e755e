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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "qlr/css.h"
#include "qlr/errors.h"
#include "qlr/oracle.h"
#include "qlr/stabilizer.h"
#include "qlr/surface.h"
#include "support/generators.h"

using namespace qlr;
using namespace qlr::testing;
using oracle::Vec;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> names(const std::vector<std::size_t> &idx, const std::function<std::string(std::size_t)> &f) {
    std::vector<std::string> out;
    for (std::size_t i : idx) {
        out.push_back(f(i));
    }
    return out;
}

std::string join(const std::vector<std::string> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        out += (i ? "," : "") + v[i];
    }
    return "{" + out + "}";
}

Outcome fig1_e7() {
    auto t0 = Clock::now();
    SurfaceCode sc = surface_to_css(fig1_surface());
    SurfacePlan plan = reduce_plan(sc, {"e7"});
    double dt = seconds_since(t0);
    const Surface &s = sc.surface;
    auto faces = names(plan.faces, [&](std::size_t f) { return s.faces()[f].id; });
    auto verts = names(plan.vertices, [&](std::size_t v) { return s.vertices()[v]; });
    auto edges = names(plan.measured_edges, [&](std::size_t e) { return s.edges()[e].id; });
    std::size_t baseline = sc.profile.ring_vertices.size() + s.faces().size() - 2;
    std::size_t stab_dim = sc.stabilizer().dim();
    bool ok = faces == std::vector<std::string>{"f3"} && verts == std::vector<std::string>{"v2"} &&
              edges == std::vector<std::string>{"e1", "e5", "e6", "e7", "e8"} && baseline == 7 && stab_dim == 7 &&
              sc.n() == 8 && dt < 1.0;
    std::ostringstream d;
    d << "faces " << join(faces) << " vertices " << join(verts) << " qubits " << join(edges) << " baseline "
      << baseline << " (dim C " << stab_dim << ") on " << sc.n() << " qubits, " << dt * 1e3 << " ms";
    return {ok, d.str()};
}

Outcome fig1_e8_and_locality() {
    SurfaceCode sc = surface_to_css(fig1_surface());
    const Surface &s = sc.surface;
    SurfacePlan plan = reduce_plan(sc, {"e8"});
    auto faces = names(plan.faces, [&](std::size_t f) { return s.faces()[f].id; });
    auto verts = names(plan.vertices, [&](std::size_t v) { return s.vertices()[v]; });
    auto edges = names(plan.measured_edges, [&](std::size_t e) { return s.edges()[e].id; });
    std::size_t r = locality_single(s);
    std::size_t worst = 0;
    for (std::size_t e = 0; e < s.edges().size(); e++) {
        worst = std::max(worst, reduce_plan(sc, {s.edges()[e].id}).measured_edges.size());
    }
    bool ok = faces == std::vector<std::string>{"f3"} && verts == std::vector<std::string>{"v1"} &&
              edges == std::vector<std::string>{"e1", "e2", "e3", "e6", "e7", "e8"} && r == 5 && worst <= 6;
    std::ostringstream d;
    d << "e8: faces " << join(faces) << " vertices " << join(verts) << " qubits " << join(edges)
      << "; single-erasure locality " << r << "; largest single-edge plan " << worst << " qubits";
    return {ok, d.str()};
}

Vec sub_mod(std::uint32_t p, const Vec &a, const Vec &b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        out[i] = (a[i] + p - b[i]) % p;
    }
    return out;
}

// Each syndrome class of errors on I is exactly one coset of C ∩ F^I.
bool classes_are_cosets(const StabilizerCode &c, const FpMatrix &d, const ErasurePattern &i) {
    std::vector<Vec> inside = oracle::restricted_elements(c, i);
    std::set<Vec> r(inside.begin(), inside.end());
    auto classes = oracle::syndrome_classes(d, i);
    for (const auto &[s, members] : classes) {
        if (members.size() != r.size()) {
            return false;
        }
        for (const Vec &e : members) {
            if (!r.count(sub_mod(c.p(), e, members.front()))) {
                return false;
            }
        }
    }
    // Cross-check the decoder oracle on the first class.
    const auto &[s0, m0] = *classes.begin();
    std::vector<Vec> sol = oracle::brute_decode(c, i, d, s0);
    std::vector<Vec> want = m0;
    std::sort(sol.begin(), sol.end());
    std::sort(want.begin(), want.end());
    if (sol != want) {
        throw std::logic_error("brute_decode disagrees with syndrome_classes");
    }
    return true;
}

// A subspace of C: either random combinations, or a plan padded with extras.
FpMatrix random_d(const StabilizerCode &c, const ErasurePattern &i, Rng &rng) {
    const FpMatrix &g = c.generators();
    switch (rng() % 3) {
        case 0:
            return random_subspace_of(g, rng() % (g.rows() + 1), rng);
        case 1:
            if (erasure_correctable(c, i)) {
                FpMatrix plan = plan_measurements(c, i).observables;
                return vstack(plan, random_subspace_of(g, rng() % 2, rng));
            }
            return g;
        default: {
            if (!erasure_correctable(c, i)) {
                return random_subspace_of(g, rng() % (g.rows() + 1), rng);
            }
            // Drop one row from a plan, which usually breaks it.
            FpMatrix plan = plan_measurements(c, i).observables;
            if (plan.rows() == 0) {
                return plan;
            }
            std::vector<std::size_t> keep;
            std::size_t skip = rng() % plan.rows();
            for (std::size_t r = 0; r < plan.rows(); r++) {
                if (r != skip) {
                    keep.push_back(r);
                }
            }
            return plan.select_rows(keep);
        }
    }
}

Outcome oracle_equivalence() {
    Rng rng(20260001);
    int trials = 0;
    int mismatches = 0;
    int passing = 0;
    for (; trials < 600; trials++) {
        std::uint32_t p = trials % 2 ? 3 : 2;
        std::size_t n = 1 + rng() % 5;
        StabilizerCode c = random_stabilizer_code(p, n, rng() % (n + 1), rng);
        ErasurePattern i = random_pattern(n, rng() % (n + 1), rng);
        FpMatrix d = random_d(c, i, rng);
        bool fast = verify_plan(c, d, i);
        bool brute = classes_are_cosets(c, d, i);
        mismatches += fast != brute;
        passing += fast;
    }
    std::ostringstream out;
    out << trials << " triples (p in {2,3}, n <= 5), " << passing << " valid plans, " << mismatches
        << " discrepancies";
    return {mismatches == 0 && trials >= 500 && passing > 0 && passing < trials, out.str()};
}

Outcome optimality() {
    Rng rng(20260002);
    int tested = 0;
    int mismatches = 0;
    for (int attempt = 0; attempt < 5000 && tested < 250; attempt++) {
        std::size_t n = 1 + rng() % 6;
        StabilizerCode c = random_stabilizer_code(2, n, rng() % (n + 1), rng);
        ErasurePattern i = random_pattern(n, rng() % (n + 1), rng);
        if (!erasure_correctable(c, i)) {
            continue;
        }
        tested++;
        std::size_t plan = plan_measurements(c, i).dim();
        std::size_t brute = oracle::brute_min_D(c, i);
        std::size_t proj = projected_dim(c.generators(), i);
        mismatches += !(plan == brute && plan == proj && plan <= 2 * i.size());
    }
    std::ostringstream out;
    out << tested << " correctable cases (p = 2, n <= 6), " << mismatches << " discrepancies";
    return {mismatches == 0 && tested >= 200, out.str()};
}

Outcome bidirectional() {
    Rng rng(20260003);
    int trials = 0;
    int mismatches = 0;
    int counts[2][2] = {{0, 0}, {0, 0}};
    for (; trials < 600; trials++) {
        std::uint32_t p = trials % 2 ? 3 : 2;
        std::size_t n = 1 + rng() % 5;
        StabilizerCode c = random_stabilizer_code(p, n, rng() % (n + 1), rng);
        ErasurePattern i = random_pattern(n, rng() % (n + 1), rng);
        FpMatrix d = random_d(c, i, rng);
        bool eq3 = verify_plan(c, d, i);
        bool eq1 = oracle::brute_correctable(c, i);
        bool eq2 = oracle::brute_decomposes(c, d, i);
        counts[eq1][eq2]++;
        mismatches += eq3 != (eq1 && eq2);
    }
    std::ostringstream out;
    out << trials << " triples, " << mismatches << " discrepancies (correctable/decomposes: 00=" << counts[0][0]
        << " 01=" << counts[0][1] << " 10=" << counts[1][0] << " 11=" << counts[1][1] << ")";
    bool covered = counts[0][1] > 0 && counts[1][0] > 0 && counts[1][1] > 0;
    return {mismatches == 0 && trials >= 500 && covered, out.str()};
}

Surface random_tiling(Rng &rng, std::string *label) {
    while (true) {
        if (rng() % 2) {
            std::size_t l1 = 2 + rng() % 4;
            std::size_t l2 = 2 + rng() % 4;
            if (2 * l1 * l2 > 30) {
                continue;
            }
            *label = "torus";
            return torus(l1, l2);
        }
        std::size_t w = 1 + rng() % 4;
        std::size_t h = 1 + rng() % 4;
        if (w * (h + 1) + h * (w + 1) > 30) {
            continue;
        }
        std::vector<std::string> open;
        for (const auto &e : patch_boundary(w, h)) {
            if (rng() % 2) {
                open.push_back(e);
            }
        }
        *label = "patch";
        return planar_patch(w, h, open);
    }
}

Outcome css_surface_consistency() {
    Rng rng(20260004);
    int tilings = 0;
    int cases = 0;
    int mismatches = 0;
    std::map<std::string, int> kinds;
    for (int t = 0; t < 80; t++) {
        std::string label;
        Surface s = random_tiling(rng, &label);
        SurfaceCode sc = surface_to_css(s);
        if (sc.n() == 0) {
            continue;
        }
        StabilizerCode c = sc.stabilizer();
        int here = 0;
        for (int k = 0; k < 6; k++) {
            ErasurePattern i = random_pattern(sc.n(), 1 + rng() % 4, rng);
            if (!erasure_correctable(c, i)) {
                continue;
            }
            std::vector<std::string> ids;
            for (std::size_t q : i.indices()) {
                ids.push_back(s.edges()[sc.qubit_edges[q]].id);
            }
            SurfacePlan plan = reduce_plan(sc, ids);
            CssPlan css = plan_css(sc.css, i);
            TouchedSets touched = touched_sets(sc, ids);
            std::size_t general = plan_measurements(c, i).dim();
            bool ok = plan.faces.size() == css.dx.rows() && plan.vertices.size() == css.dz.rows() &&
                      plan.dim() == css.dim() && plan.dim() == general && plan.faces.size() <= i.size() &&
                      plan.vertices.size() <= i.size() && plan.dim() <= 2 * i.size() &&
                      touched.faces.size() <= 2 * i.size() && touched.vertices.size() <= 2 * i.size() &&
                      verify_plan(c, plan_observables(sc, plan.faces, plan.vertices), i);
            mismatches += !ok;
            here++;
        }
        if (here) {
            tilings++;
            cases += here;
            kinds[label]++;
        }
    }
    std::ostringstream out;
    out << tilings << " tilings (" << kinds["torus"] << " tori, " << kinds["patch"] << " patches), " << cases
        << " patterns, " << mismatches << " discrepancies";
    return {mismatches == 0 && tilings >= 50 && kinds["torus"] > 0 && kinds["patch"] > 0, out.str()};
}

Outcome extremal() {
    std::ostringstream out;
    bool ok = true;
    for (auto [name, code] : {std::pair{"Bell", bell_code()}, std::pair{"[[4,2,2]]", c422_code()}}) {
        std::size_t fixed = min_fixed_set(code, 1).dim;
        std::size_t dual = min_fixed_set_dual_form(code, 1);
        std::size_t brute = oracle::brute_min_fixed_set(code, 1);
        std::size_t worst = worst_case_measurements(code, 1).measurements;
        ok = ok && fixed == 2 && dual == fixed && brute == fixed && fixed >= worst;
        out << name << ": fixed " << fixed << " dual form " << dual << " oracle " << brute << " worst case " << worst
            << "; ";
    }
    return {ok, out.str()};
}

// Median wall time of plan_measurements on a random binary code.
double median_plan_seconds(std::size_t n, std::size_t dim, int reps, Rng &rng) {
    std::vector<double> times;
    while (static_cast<int>(times.size()) < reps) {
        StabilizerCode c = random_stabilizer_code(2, n, dim, rng);
        ErasurePattern i = random_pattern(n, n / 10, rng);
        if (!erasure_correctable(c, i)) {
            continue;
        }
        auto t0 = Clock::now();
        MeasurementPlan plan = plan_measurements(c, i);
        times.push_back(seconds_since(t0));
        if (plan.dim() > 2 * i.size()) {
            throw std::logic_error("plan larger than 2|I|");
        }
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

Outcome performance() {
    Rng rng(20260005);
    double t100 = median_plan_seconds(100, 50, 5, rng);
    double t50 = median_plan_seconds(50, 25, 9, rng);
    double t200 = median_plan_seconds(200, 100, 5, rng);
    double ratio = t200 / t50;
    double exponent = std::log(ratio) / std::log(4.0);
    // O(n^3) bounds growth from above: 4x the size may cost at most 64x, and we
    // allow another factor of 4 for noise. Packed binary rows make small sizes
    // grow slower than cubic, which is still within the bound.
    bool ok = t100 < 1.0 && ratio <= 4.0 * 64.0;
    std::ostringstream out;
    out << "n=100: " << t100 * 1e3 << " ms; n=50: " << t50 * 1e3 << " ms; n=200: " << t200 * 1e3
        << " ms; ratio " << ratio << " (cubic 64, limit 256), fitted exponent " << exponent;
    return {ok, out.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"fig1 single erasure e7", fig1_e7},
        {"fig1 e8 plan and locality", fig1_e8_and_locality},
        {"plan validity matches decoding oracle", oracle_equivalence},
        {"plan dimension is optimal", optimality},
        {"validity iff correctable and decomposes", bidirectional},
        {"css and surface layers agree", css_surface_consistency},
        {"fixed-set and worst-case extremes", extremal},
        {"cubic runtime", performance},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
