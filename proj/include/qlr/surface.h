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

#ifndef QLR_SURFACE_H
#define QLR_SURFACE_H

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlr/css.h"
#include "qlr/fp_matrix.h"
#include "qlr/stabilizer.h"

namespace qlr {

/// Structural problems with a surface description (dangling references,
/// duplicate ids, odd vertex/face incidence, ...).
class MalformedSurfaceError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct SurfaceEdge {
    std::string id;
    /// One entry, or two equal entries, for a self-loop.
    std::vector<std::string> ends;
};

struct SurfaceFace {
    std::string id;
    std::vector<std::string> edges;
};

/// Combinatorial surface (V, E, F) with the subset of boundary edges that are
/// open. Parallel edges and self-loops are allowed; no planarity is assumed.
class Surface {
   public:
    Surface(
        std::vector<std::string> vertices,
        std::vector<SurfaceEdge> edges,
        std::vector<SurfaceFace> faces,
        std::vector<std::string> open_edges = {});

    const std::vector<std::string> &vertices() const {
        return vertices_;
    }
    const std::vector<SurfaceEdge> &edges() const {
        return edges_;
    }
    const std::vector<SurfaceFace> &faces() const {
        return faces_;
    }
    const std::vector<std::string> &open_edges() const {
        return open_edges_;
    }

    std::size_t vertex_index(const std::string &id) const;
    std::size_t edge_index(const std::string &id) const;
    std::size_t face_index(const std::string &id) const;

    /// Distinct endpoint vertex indices of edge e (one for a self-loop).
    const std::vector<std::size_t> &edge_ends(std::size_t e) const {
        return edge_ends_[e];
    }
    /// Edge indices of face f, in declaration order.
    const std::vector<std::size_t> &face_edges(std::size_t f) const {
        return face_edges_[f];
    }
    /// Faces containing edge e, ascending.
    const std::vector<std::size_t> &edge_faces(std::size_t e) const {
        return edge_faces_[e];
    }
    /// Edges incident to vertex v, ascending.
    const std::vector<std::size_t> &vertex_edges(std::size_t v) const {
        return vertex_edges_[v];
    }

   private:
    std::vector<std::string> vertices_;
    std::vector<SurfaceEdge> edges_;
    std::vector<SurfaceFace> faces_;
    std::vector<std::string> open_edges_;
    std::map<std::string, std::size_t> vertex_ids_;
    std::map<std::string, std::size_t> edge_ids_;
    std::map<std::string, std::size_t> face_ids_;
    std::vector<std::vector<std::size_t>> edge_ends_;
    std::vector<std::vector<std::size_t>> face_edges_;
    std::vector<std::vector<std::size_t>> edge_faces_;
    std::vector<std::vector<std::size_t>> vertex_edges_;
};

/// Boundary classification. All sets are index lists in declaration order.
struct BoundaryProfile {
    std::vector<std::size_t> boundary_edges;
    std::vector<std::size_t> boundary_faces;
    std::vector<std::size_t> boundary_vertices;
    std::vector<bool> edge_open;
    std::vector<bool> face_open;
    std::vector<bool> vertex_open;
    /// Vertices and edges that are not open (interior or closed boundary).
    std::vector<std::size_t> ring_vertices;
    std::vector<std::size_t> ring_edges;
};

/// An edge is a boundary edge when it lies in exactly one face. Throws
/// std::invalid_argument if an open edge is not a boundary edge.
BoundaryProfile classify_boundary(const Surface &surface);

/// The CSS code of a surface. Qubits are the non-open edges in declaration
/// order. C_X is spanned by every face restricted to those edges, C_Z by the
/// non-open vertices.
struct SurfaceCode {
    Surface surface;
    BoundaryProfile profile;
    /// Edge index of each qubit column.
    std::vector<std::size_t> qubit_edges;
    /// Qubit column of each edge, or npos for open edges.
    std::vector<std::size_t> edge_column;
    /// One row per face, in declaration order.
    FpMatrix face_vectors;
    /// One row per entry of profile.ring_vertices.
    FpMatrix vertex_vectors;
    CssCode css;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t n() const {
        return qubit_edges.size();
    }
    StabilizerCode stabilizer() const {
        return css_to_stabilizer(css);
    }
    /// Erasure pattern over qubit columns for the given edge ids. Throws
    /// std::invalid_argument for unknown, duplicate or open edges.
    ErasurePattern erasures(const std::vector<std::string> &edge_ids) const;
    /// Row of vertex_vectors for a vertex index, or npos when the vertex is open.
    std::size_t vertex_row(std::size_t v) const;
};

/// Throws MalformedSurfaceError when a face and a vertex share an odd number
/// of qubit edges.
SurfaceCode surface_to_css(const Surface &surface);

struct TouchedSets {
    /// Non-open vertices on some erased edge.
    std::vector<std::size_t> vertices;
    /// Faces containing some erased edge.
    std::vector<std::size_t> faces;
};

TouchedSets touched_sets(const SurfaceCode &code, const std::vector<std::string> &edge_ids);
TouchedSets touched_sets(const Surface &surface, const std::vector<std::string> &edge_ids);

struct SurfacePlan {
    ErasurePattern erasures;
    /// Face and vertex indices to measure, in declaration order.
    std::vector<std::size_t> faces;
    std::vector<std::size_t> vertices;
    /// Edge indices in the support of the chosen observables, ascending.
    std::vector<std::size_t> measured_edges;

    std::size_t dim() const {
        return faces.size() + vertices.size();
    }
};

/// Selects actual faces and vertices forming minimal per-sector plans, by
/// row reduction with the erased columns first. Ties go to the earliest
/// declared face/vertex. Throws NotCorrectableError if the pattern cannot be
/// corrected.
SurfacePlan reduce_plan(const SurfaceCode &code, const std::vector<std::string> &edge_ids);
SurfacePlan reduce_plan(const Surface &surface, const std::vector<std::string> &edge_ids);

/// Plan observables in the stabilizer layout: faces as (0|f), then vertices
/// as (v|0).
FpMatrix plan_observables(const SurfaceCode &code, const std::vector<std::size_t> &faces,
                          const std::vector<std::size_t> &vertices);

/// r = max over δ-subsets I of qubit edges of
/// |{e' : e' meets some e ∈ I} ∪ ⋃_{f ∩ I ≠ ∅} f| − δ + 1, with every set
/// restricted to qubit edges. Requires 1 ≤ δ ≤ number of qubits.
std::size_t locality_profile(const Surface &surface, std::size_t delta);

/// r = max over qubit edges e of min over non-open v ∈ e and faces f ∋ e of
/// |{e' : v ∈ e'} ∪ f| − 1, restricted to qubit edges. Throws
/// UndefinedMinimumError when some edge has no such (v, f) pair.
std::size_t locality_single(const Surface &surface);

}  // namespace qlr

#endif
