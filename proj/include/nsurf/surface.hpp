#pragma once

#include <string>
#include <vector>

#include "nsurf/normal.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

/// The surface carried by an admissible vector, realised as a cell complex:
/// one polygonal cell per normal piece, arcs matched across internal faces
/// by stacking order, corner classes computed by closing the arc-endpoint
/// identifications.
struct SurfaceComplex {
    struct Cell {
        int tet;
        int type;         // 0..3: triangle isolating that vertex; 4..6: quad type-4
        long long index;  // stacking position within (tet, type), 0 nearest the
                          // isolated vertex / the quad's 0-side pair
        int side_count() const { return type < 4 ? 3 : 4; }
    };
    struct ArcRef {
        int cell;
        int side;
    };
    struct MatchedArc {
        ArcRef a, b;
        bool start_to_start;  // whether a's start corner identifies with b's start corner
    };

    std::vector<Cell> cells;
    std::vector<MatchedArc> matched;
    std::vector<ArcRef> boundary;

    std::vector<int> corner_offset;  // prefix offset of each cell's corner slots
    std::vector<int> corner_class;   // corner slot -> class id
    int corner_class_count = 0;
};

enum class SurfaceKind {
    Disc,
    Sphere,
    ProjectivePlane,
    Cylinder,
    MobiusStrip,
    OrientableGenus,
    NonOrientableGenus,
    Other,
};

struct TopologyClass {
    long long euler = 0;
    int components = 0;
    bool orientable = true;   // all components orientable
    int boundary_curves = 0;  // total over components
    SurfaceKind kind = SurfaceKind::Other;  // of the surface when connected, Other otherwise
    long long genus = 0;  // connected surfaces: orientable genus g, or non-orientable genus k

    struct Component {
        long long euler = 0;
        bool orientable = true;
        int boundary_curves = 0;
        SurfaceKind kind = SurfaceKind::Other;
        long long genus = 0;
    };
    std::vector<Component> per_component;
};

/// Textual kind including the genus parameter, e.g. "orientable-genus-2".
std::string kind_name(const TopologyClass& tc);
std::string kind_name(SurfaceKind kind, long long genus);

SurfaceComplex reconstruct_surface(const Triangulation& t, const NormalVector& v);

TopologyClass classify_surface(const SurfaceComplex& c);

/// Euler characteristic by the independent per-piece linear functional:
/// edge-orbit crossing weights minus arc counts plus piece counts.  Kept
/// separate from the cell-complex computation so the two can cross-check.
Int euler_characteristic_linear(const Triangulation& t, const NormalVector& v);

/// The coordinate vector of the link of a vertex orbit: one triangle per
/// corner in the orbit.
NormalVector vertex_link_vector(const Triangulation& t, int orbit);

/// True iff v is exactly the link vector of some vertex orbit.
bool is_vertex_linking(const Triangulation& t, const NormalVector& v);

}  // namespace nsurf
