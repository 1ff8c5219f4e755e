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

#include "qlr/surface.h"

#include <algorithm>
#include <set>

#include "qlr/errors.h"

namespace qlr {

namespace {

std::map<std::string, std::size_t> index_ids(const std::vector<std::string> &ids, const char *kind) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < ids.size(); i++) {
        if (!out.emplace(ids[i], i).second) {
            throw MalformedSurfaceError(std::string("duplicate ") + kind + " id '" + ids[i] + "'");
        }
    }
    return out;
}

std::size_t lookup(const std::map<std::string, std::size_t> &ids, const std::string &id, const char *kind) {
    auto it = ids.find(id);
    if (it == ids.end()) {
        throw std::invalid_argument(std::string("unknown ") + kind + " '" + id + "'");
    }
    return it->second;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

Surface::Surface(
    std::vector<std::string> vertices,
    std::vector<SurfaceEdge> edges,
    std::vector<SurfaceFace> faces,
    std::vector<std::string> open_edges)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      open_edges_(std::move(open_edges)) {
    vertex_ids_ = index_ids(vertices_, "vertex");
    std::vector<std::string> names;
    for (const auto &e : edges_) {
        names.push_back(e.id);
    }
    edge_ids_ = index_ids(names, "edge");
    names.clear();
    for (const auto &f : faces_) {
        names.push_back(f.id);
    }
    face_ids_ = index_ids(names, "face");

    vertex_edges_.resize(vertices_.size());
    for (std::size_t e = 0; e < edges_.size(); e++) {
        const auto &ends = edges_[e].ends;
        if (ends.empty() || ends.size() > 2) {
            throw MalformedSurfaceError("edge '" + edges_[e].id + "' must have 1 or 2 endpoints");
        }
        std::vector<std::size_t> idx;
        for (const auto &v : ends) {
            auto it = vertex_ids_.find(v);
            if (it == vertex_ids_.end()) {
                throw MalformedSurfaceError("edge '" + edges_[e].id + "' references unknown vertex '" + v + "'");
            }
            idx.push_back(it->second);
        }
        idx = sorted_unique(std::move(idx));
        for (std::size_t v : idx) {
            vertex_edges_[v].push_back(e);
        }
        edge_ends_.push_back(std::move(idx));
    }

    edge_faces_.resize(edges_.size());
    for (std::size_t f = 0; f < faces_.size(); f++) {
        std::vector<std::size_t> idx;
        for (const auto &e : faces_[f].edges) {
            auto it = edge_ids_.find(e);
            if (it == edge_ids_.end()) {
                throw MalformedSurfaceError("face '" + faces_[f].id + "' references unknown edge '" + e + "'");
            }
            if (std::find(idx.begin(), idx.end(), it->second) != idx.end()) {
                throw MalformedSurfaceError("face '" + faces_[f].id + "' lists edge '" + e + "' twice");
            }
            idx.push_back(it->second);
            edge_faces_[it->second].push_back(f);
        }
        face_edges_.push_back(std::move(idx));
    }
    for (std::size_t e = 0; e < edges_.size(); e++) {
        if (edge_faces_[e].size() > 2) {
            throw MalformedSurfaceError(
                "edge '" + edges_[e].id + "' lies in " + std::to_string(edge_faces_[e].size()) +
                " faces; at most 2 are allowed");
        }
    }

    std::set<std::string> seen;
    for (const auto &e : open_edges_) {
        if (!edge_ids_.count(e)) {
            throw MalformedSurfaceError("open_edges references unknown edge '" + e + "'");
        }
        if (!seen.insert(e).second) {
            throw MalformedSurfaceError("open_edges lists '" + e + "' twice");
        }
    }
}

std::size_t Surface::vertex_index(const std::string &id) const {
    return lookup(vertex_ids_, id, "vertex");
}

std::size_t Surface::edge_index(const std::string &id) const {
    return lookup(edge_ids_, id, "edge");
}

std::size_t Surface::face_index(const std::string &id) const {
    return lookup(face_ids_, id, "face");
}

BoundaryProfile classify_boundary(const Surface &surface) {
    const std::size_t nv = surface.vertices().size();
    const std::size_t ne = surface.edges().size();
    const std::size_t nf = surface.faces().size();
    BoundaryProfile out;
    out.edge_open.assign(ne, false);
    out.face_open.assign(nf, false);
    out.vertex_open.assign(nv, false);

    std::vector<bool> boundary_edge(ne, false);
    for (std::size_t e = 0; e < ne; e++) {
        if (surface.edge_faces(e).size() == 1) {
            boundary_edge[e] = true;
            out.boundary_edges.push_back(e);
        }
    }
    for (const auto &id : surface.open_edges()) {
        std::size_t e = surface.edge_index(id);
        if (!boundary_edge[e]) {
            throw std::invalid_argument(
                "open edge '" + id + "' is not a boundary edge (it lies in " +
                std::to_string(surface.edge_faces(e).size()) + " faces)");
        }
        out.edge_open[e] = true;
    }

    std::vector<bool> boundary_face(nf, false);
    std::vector<bool> boundary_vertex(nv, false);
    for (std::size_t e : out.boundary_edges) {
        for (std::size_t f : surface.edge_faces(e)) {
            boundary_face[f] = true;
            out.face_open[f] = out.face_open[f] || out.edge_open[e];
        }
        for (std::size_t v : surface.edge_ends(e)) {
            boundary_vertex[v] = true;
            out.vertex_open[v] = out.vertex_open[v] || out.edge_open[e];
        }
    }
    for (std::size_t f = 0; f < nf; f++) {
        if (boundary_face[f]) {
            out.boundary_faces.push_back(f);
        }
    }
    for (std::size_t v = 0; v < nv; v++) {
        if (boundary_vertex[v]) {
            out.boundary_vertices.push_back(v);
        }
        if (!out.vertex_open[v]) {
            out.ring_vertices.push_back(v);
        }
    }
    for (std::size_t e = 0; e < ne; e++) {
        if (!out.edge_open[e]) {
            out.ring_edges.push_back(e);
        }
    }
    return out;
}

namespace {

struct Incidence {
    BoundaryProfile profile;
    std::vector<std::size_t> edge_column;
    FpMatrix face_vectors;
    FpMatrix vertex_vectors;
};

Incidence build_incidence(const Surface &surface) {
    BoundaryProfile profile = classify_boundary(surface);
    const std::size_t n = profile.ring_edges.size();
    std::vector<std::size_t> column(surface.edges().size(), SurfaceCode::npos);
    for (std::size_t c = 0; c < n; c++) {
        column[profile.ring_edges[c]] = c;
    }
    FpMatrix faces(2, surface.faces().size(), n);
    for (std::size_t f = 0; f < surface.faces().size(); f++) {
        for (std::size_t e : surface.face_edges(f)) {
            if (column[e] != SurfaceCode::npos) {
                faces.set(f, column[e], 1);
            }
        }
    }
    FpMatrix verts(2, profile.ring_vertices.size(), n);
    for (std::size_t r = 0; r < profile.ring_vertices.size(); r++) {
        for (std::size_t e : surface.vertex_edges(profile.ring_vertices[r])) {
            if (column[e] != SurfaceCode::npos) {
                verts.set(r, column[e], 1);
            }
        }
    }
    for (std::size_t f = 0; f < faces.rows(); f++) {
        for (std::size_t r = 0; r < verts.rows(); r++) {
            std::size_t shared = 0;
            for (std::size_t c = 0; c < n; c++) {
                shared += faces(f, c) & verts(r, c);
            }
            if (shared % 2) {
                throw MalformedSurfaceError(
                    "face '" + surface.faces()[f].id + "' and vertex '" +
                    surface.vertices()[profile.ring_vertices[r]] + "' share " + std::to_string(shared) +
                    " qubit edges; the count must be even");
            }
        }
    }
    return Incidence{std::move(profile), std::move(column), std::move(faces), std::move(verts)};
}

}  // namespace

SurfaceCode surface_to_css(const Surface &surface) {
    Incidence inc = build_incidence(surface);
    CssCode css(ClassicalCode::from_spanning_set(inc.face_vectors), ClassicalCode::from_spanning_set(inc.vertex_vectors));
    return SurfaceCode{
        surface,
        inc.profile,
        inc.profile.ring_edges,
        std::move(inc.edge_column),
        std::move(inc.face_vectors),
        std::move(inc.vertex_vectors),
        std::move(css)};
}

ErasurePattern SurfaceCode::erasures(const std::vector<std::string> &edge_ids) const {
    std::vector<std::size_t> cols;
    for (const auto &id : edge_ids) {
        std::size_t e = surface.edge_index(id);
        if (edge_column[e] == npos) {
            throw std::invalid_argument("edge '" + id + "' is an open boundary edge and carries no qubit");
        }
        cols.push_back(edge_column[e]);
    }
    std::vector<std::size_t> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate edge in erasure list");
    }
    return ErasurePattern(n(), std::move(cols));
}

std::size_t SurfaceCode::vertex_row(std::size_t v) const {
    auto it = std::lower_bound(profile.ring_vertices.begin(), profile.ring_vertices.end(), v);
    if (it == profile.ring_vertices.end() || *it != v) {
        return npos;
    }
    return static_cast<std::size_t>(it - profile.ring_vertices.begin());
}

TouchedSets touched_sets(const SurfaceCode &code, const std::vector<std::string> &edge_ids) {
    ErasurePattern pattern = code.erasures(edge_ids);
    std::vector<std::size_t> verts;
    std::vector<std::size_t> faces;
    for (std::size_t c : pattern.indices()) {
        std::size_t e = code.qubit_edges[c];
        for (std::size_t v : code.surface.edge_ends(e)) {
            if (!code.profile.vertex_open[v]) {
                verts.push_back(v);
            }
        }
        for (std::size_t f : code.surface.edge_faces(e)) {
            faces.push_back(f);
        }
    }
    return TouchedSets{sorted_unique(std::move(verts)), sorted_unique(std::move(faces))};
}

TouchedSets touched_sets(const Surface &surface, const std::vector<std::string> &edge_ids) {
    return touched_sets(surface_to_css(surface), edge_ids);
}

namespace {

// Original rows chosen as pivots inside the erased columns when reducing
// with those columns first.
std::vector<std::size_t> select_rows_touching(const FpMatrix &rows, const ErasurePattern &erasures) {
    std::vector<std::size_t> order = erasures.indices();
    ErasurePattern rest = erasures.complement();
    for (std::size_t c : rest.indices()) {
        order.push_back(c);
    }
    RrefResult r = rref(rows, order);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < r.rank(); i++) {
        if (erasures.contains(r.pivot_cols[i])) {
            chosen.push_back(r.pivot_rows[i]);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

SurfacePlan reduce_plan(const SurfaceCode &code, const std::vector<std::string> &edge_ids) {
    ErasurePattern pattern = code.erasures(edge_ids);
    if (auto w = correctability_witness(code.stabilizer(), pattern)) {
        throw NotCorrectableError("erasures are not correctable: " + w->str() + " is undetectable", *w);
    }
    std::vector<std::size_t> faces = select_rows_touching(code.face_vectors, pattern);
    std::vector<std::size_t> vertices;
    for (std::size_t r : select_rows_touching(code.vertex_vectors, pattern)) {
        vertices.push_back(code.profile.ring_vertices[r]);
    }
    std::vector<std::size_t> measured;
    for (std::size_t f : faces) {
        for (std::size_t e : code.surface.face_edges(f)) {
            if (code.edge_column[e] != SurfaceCode::npos) {
                measured.push_back(e);
            }
        }
    }
    for (std::size_t v : vertices) {
        for (std::size_t e : code.surface.vertex_edges(v)) {
            if (code.edge_column[e] != SurfaceCode::npos) {
                measured.push_back(e);
            }
        }
    }
    return SurfacePlan{std::move(pattern), std::move(faces), std::move(vertices), sorted_unique(std::move(measured))};
}

SurfacePlan reduce_plan(const Surface &surface, const std::vector<std::string> &edge_ids) {
    return reduce_plan(surface_to_css(surface), edge_ids);
}

FpMatrix plan_observables(const SurfaceCode &code, const std::vector<std::size_t> &faces,
                          const std::vector<std::size_t> &vertices) {
    const std::size_t n = code.n();
    FpMatrix out(2, 0, 2 * n);
    std::vector<fp_t> row(2 * n);
    for (std::size_t f : faces) {
        std::fill(row.begin(), row.end(), 0);
        auto src = code.face_vectors.row(f);
        std::copy(src.begin(), src.end(), row.begin() + n);
        out.append_row(row);
    }
    for (std::size_t v : vertices) {
        std::size_t r = code.vertex_row(v);
        if (r == SurfaceCode::npos) {
            throw std::invalid_argument("vertex '" + code.surface.vertices()[v] + "' is open and has no observable");
        }
        std::fill(row.begin(), row.end(), 0);
        auto src = code.vertex_vectors.row(r);
        std::copy(src.begin(), src.end(), row.begin());
        out.append_row(row);
    }
    return out;
}

std::size_t locality_profile(const Surface &surface, std::size_t delta) {
    BoundaryProfile profile = classify_boundary(surface);
    const auto &ring = profile.ring_edges;
    const std::size_t m = ring.size();
    if (delta == 0) {
        throw std::invalid_argument("locality needs delta >= 1");
    }
    if (delta > m) {
        throw std::invalid_argument(
            "delta = " + std::to_string(delta) + " exceeds the " + std::to_string(m) + " qubit edges");
    }
    // Binomial with early exit against the enumeration cap.
    std::size_t count = 1;
    for (std::size_t i = 1; i <= std::min(delta, m - delta); i++) {
        count = count * (m - std::min(delta, m - delta) + i) / i;
        if (count > kMaxPatterns) {
            throw SizeLimitError(
                "C(" + std::to_string(m) + ", " + std::to_string(delta) + ") edge subsets exceed the limit of " +
                std::to_string(kMaxPatterns));
        }
    }
    // Per ring edge, the ring edges sharing an endpoint or a face with it.
    std::vector<std::size_t> column(surface.edges().size(), SurfaceCode::npos);
    for (std::size_t c = 0; c < m; c++) {
        column[ring[c]] = c;
    }
    std::vector<std::vector<std::size_t>> reach(m);
    for (std::size_t c = 0; c < m; c++) {
        std::vector<std::size_t> out;
        for (std::size_t v : surface.edge_ends(ring[c])) {
            for (std::size_t e : surface.vertex_edges(v)) {
                if (column[e] != SurfaceCode::npos) {
                    out.push_back(column[e]);
                }
            }
        }
        for (std::size_t f : surface.edge_faces(ring[c])) {
            for (std::size_t e : surface.face_edges(f)) {
                if (column[e] != SurfaceCode::npos) {
                    out.push_back(column[e]);
                }
            }
        }
        reach[c] = sorted_unique(std::move(out));
    }
    std::vector<std::size_t> idx(delta);
    for (std::size_t i = 0; i < delta; i++) {
        idx[i] = i;
    }
    std::vector<char> hit(m);
    std::size_t best = 0;
    while (true) {
        std::fill(hit.begin(), hit.end(), 0);
        std::size_t size = 0;
        for (std::size_t c : idx) {
            for (std::size_t e : reach[c]) {
                if (!hit[e]) {
                    hit[e] = 1;
                    size++;
                }
            }
        }
        best = std::max(best, size);
        std::size_t i = delta;
        while (i > 0 && idx[i - 1] == m - delta + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        idx[i - 1]++;
        for (std::size_t j = i; j < delta; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    // An edge with no endpoint and no face reaches nothing, not even itself.
    return best + 1 >= delta ? best + 1 - delta : 0;
}

std::size_t locality_single(const Surface &surface) {
    BoundaryProfile profile = classify_boundary(surface);
    if (profile.ring_edges.empty()) {
        throw UndefinedMinimumError("the surface has no qubit edges");
    }
    std::size_t best = 0;
    std::vector<char> hit(surface.edges().size());
    for (std::size_t e : profile.ring_edges) {
        std::size_t local = SurfaceCode::npos;
        for (std::size_t v : surface.edge_ends(e)) {
            if (profile.vertex_open[v]) {
                continue;
            }
            for (std::size_t f : surface.edge_faces(e)) {
                std::fill(hit.begin(), hit.end(), 0);
                std::size_t size = 0;
                auto mark = [&](std::size_t x) {
                    if (!profile.edge_open[x] && !hit[x]) {
                        hit[x] = 1;
                        size++;
                    }
                };
                for (std::size_t x : surface.vertex_edges(v)) {
                    mark(x);
                }
                for (std::size_t x : surface.face_edges(f)) {
                    mark(x);
                }
                local = std::min(local, size - 1);
            }
        }
        if (local == SurfaceCode::npos) {
            throw UndefinedMinimumError(
                "edge '" + surface.edges()[e].id + "' has no non-open endpoint together with a containing face");
        }
        best = std::max(best, local);
    }
    return best;
}

}  // namespace qlr
