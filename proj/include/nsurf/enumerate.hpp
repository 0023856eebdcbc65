#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsurf/normal.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

/// The vertex normal surfaces of a triangulation: minimal integer
/// representatives (gcd 1) of the admissible extremal rays of the matching
/// cone, sorted lexicographically by coordinates.
struct VertexSurfaceSet {
    std::vector<NormalVector> surfaces;

    int count() const { return static_cast<int>(surfaces.size()); }
    /// Maximum coordinate over all surfaces (0 when empty).
    Int max_coordinate() const;
};

/// Double description enumeration: inserts the matching equations one at a
/// time into the non-negative orthant, maintaining the admissible extremal
/// rays of the intermediate cone.  Rays violating the quadrilateral
/// constraints are discarded as soon as they appear; since supports only
/// grow under positive combination, such rays can never contribute to an
/// admissible extremal ray.  Exact integer arithmetic throughout.
VertexSurfaceSet enumerate_vertex_surfaces(const Triangulation& t);

/// Independent oracle for small instances (guarded at 7n <= 28): enumerates
/// candidate supports directly, keeping those whose restricted matching
/// system has a one-dimensional strictly positive kernel.  Must agree with
/// enumerate_vertex_surfaces exactly.
VertexSurfaceSet brute_force_vertex_surfaces(const Triangulation& t);

struct ComplexityStats {
    Int sigma = 0;        // number of vertex normal surfaces
    Int kappa = 0;        // maximum coordinate over all of them
    Int sigma_discs = 0;  // restricted to surfaces classified as discs
    Int kappa_discs = 0;
};

ComplexityStats complexity_stats(const Triangulation& t);
ComplexityStats complexity_stats(const Triangulation& t, const VertexSurfaceSet& s);

/// Number of vertex normal surfaces meeting the given boundary face in at
/// least one arc around `arc_vertex` and in no other arc type.
Int count_with_face_pattern(const Triangulation& t, int tet, int face, int arc_vertex);
Int count_with_face_pattern(const Triangulation& t, const VertexSurfaceSet& s, int tet, int face,
                            int arc_vertex);

/// Surface-list text form: `#tri <gluing row>` echo lines (so that pipelines
/// can recover the triangulation), a `n=<n> sigma=<count> kappa=<max>`
/// header, then one normal vector per line.
std::string format_surface_list(const Triangulation& t, const std::vector<NormalVector>& surfaces);

struct SurfaceList {
    Triangulation tri;
    std::vector<NormalVector> surfaces;
};

SurfaceList parse_surface_list(std::istream& in);

}  // namespace nsurf
