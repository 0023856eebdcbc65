#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsurf/triangulation.hpp"

namespace nsurf {

/// Exact integer type for normal coordinates.  Intermediate values during
/// ray enumeration can exceed machine words even when the final maxima are
/// small, so everything runs on arbitrary precision.
using Int = boost::multiprecision::cpp_int;

/// A 7n-coordinate vector in per-tetrahedron blocks
/// (t0, t1, t2, t3 | q01, q02, q03): tX counts triangles isolating vertex X,
/// qXY counts quadrilaterals separating edge XY from the opposite edge.
struct NormalVector {
    std::vector<Int> coords;

    NormalVector() = default;
    explicit NormalVector(int tets) : coords(static_cast<size_t>(7 * tets)) {}

    int tets() const { return static_cast<int>(coords.size()) / 7; }

    Int& tri(int tet, int v) { return coords[static_cast<size_t>(7 * tet + v)]; }
    const Int& tri(int tet, int v) const { return coords[static_cast<size_t>(7 * tet + v)]; }
    Int& quad(int tet, int m) { return coords[static_cast<size_t>(7 * tet + 4 + m)]; }
    const Int& quad(int tet, int m) const { return coords[static_cast<size_t>(7 * tet + 4 + m)]; }

    friend bool operator==(const NormalVector&, const NormalVector&) = default;
    friend auto operator<=>(const NormalVector& a, const NormalVector& b) {
        return a.coords <=> b.coords;
    }
};

constexpr int tri_coord(int tet, int v) { return 7 * tet + v; }
constexpr int quad_coord(int tet, int m) { return 7 * tet + 4 + m; }

/// Quad type (0,1,2) = (q01, q02, q03); type m pairs vertex 0 with m+1.
/// quad_through_pair(a, b) is the type whose quadrilateral separates edge
/// {a,b} from the opposite edge.
constexpr int quad_through_pair(int a, int b) {
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    return (6 - a - b) - 1;  // complement pair contains 0 and 6-a-b
}

/// The two quad types whose pieces cross edge {a,b}.
constexpr std::array<int, 2> quads_crossing_edge(int a, int b) {
    int skip = quad_through_pair(a, b);
    std::array<int, 2> out{-1, -1};
    int k = 0;
    for (int m = 0; m < 3; ++m)
        if (m != skip) out[static_cast<size_t>(k++)] = m;
    return out;
}

/// Number of normal arcs cutting off vertex v on face `face` of `tet`:
/// the triangles isolating v plus the quads pairing v with the vertex
/// opposite the face.
Int arc_count(const NormalVector& vec, int tet, int face, int v);

/// Integer matrix of matching equations: one row per arc type per internal
/// face, entries in {-1,0,+1}.  Row order: internal faces by their smaller
/// (tet, face) side, arc types by cut-off vertex label; the smaller side
/// carries the +1 entries.  For a face glued to another face of the same
/// tetrahedron, coinciding terms cancel, so such rows may have only two
/// non-zero entries.
struct MatchingSystem {
    int cols = 0;
    std::vector<std::vector<int8_t>> rows;
    struct RowInfo {
        int tet, face, arc_vertex;
    };
    std::vector<RowInfo> info;
};

MatchingSystem matching_matrix(const Triangulation& t);

/// True iff vec is non-negative, lies in the kernel of the matching matrix,
/// and each tetrahedron has at most one non-zero quad coordinate.
bool is_admissible(const Triangulation& t, const NormalVector& vec);

bool satisfies_quad_constraints(const NormalVector& vec);
bool in_matching_kernel(const MatchingSystem& m, const NormalVector& vec);

/// Arc counts of a boundary face, ordered by ascending cut-off vertex label
/// (smallest vertex first).
std::array<Int, 3> boundary_pattern(const Triangulation& t, const NormalVector& vec, int tet,
                                    int face);

/// Number of intersections of the carried surface with tetrahedron edge
/// {a,b}: both isolating triangles plus the two crossing quad types.  For an
/// admissible vector this is constant across an edge orbit.
Int edge_weight(const NormalVector& vec, int tet, int a, int b);

/// Text form: blocks `t0,t1,t2,t3|q01,q02,q03` joined by `;`.
std::string format_normal_vector(const NormalVector& vec);
NormalVector parse_normal_vector(const std::string& text);

}  // namespace nsurf
