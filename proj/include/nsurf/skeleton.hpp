#pragma once

#include <vector>

#include "nsurf/triangulation.hpp"

namespace nsurf {

enum class LinkClass { Sphere, Disc, Other };

const char* to_string(LinkClass c);

/// Identification orbits of the 4n tetrahedron corners and 6n tetrahedron
/// edges, plus per-orbit link/validity data.  Corner slot = 4*tet + vertex,
/// edge slot = 6*tet + edge index.  Orbit ids are dense and ordered by the
/// minimum slot they contain.
struct SkeletonData {
    std::vector<int> vertex_orbit;        // corner slot -> orbit id
    std::vector<int> edge_orbit;          // edge slot -> orbit id
    std::vector<int8_t> edge_sign;        // orientation relative to orbit root
    int vertex_orbit_count = 0;
    int edge_orbit_count = 0;
    std::vector<bool> edge_valid;         // per edge orbit: not self-identified in reverse
    std::vector<bool> edge_boundary;      // per edge orbit: touches a boundary face
    std::vector<LinkClass> link_class;    // per vertex orbit
    std::vector<int> link_euler;          // per vertex orbit
    std::vector<bool> link_has_boundary;  // per vertex orbit
    std::vector<std::pair<int, int>> boundary_faces;

    int vertex_orbit_of(int tet, int v) const {
        return vertex_orbit[static_cast<size_t>(4 * tet + v)];
    }
    int edge_orbit_of(int tet, int a, int b) const {
        return edge_orbit[static_cast<size_t>(6 * tet + edge_index(a, b))];
    }
};

SkeletonData compute_skeleton(const Triangulation& t);

std::vector<LinkClass> classify_vertex_links(const Triangulation& t);

struct ValidityReport {
    SkeletonData skeleton;
    bool all_edges_valid = false;
    bool all_links_sphere_or_disc = false;
    bool connected = false;
    bool is_3manifold = false;  // connected, valid edges, sphere/disc links
    bool is_closed = false;
    bool is_bounded = false;
};

ValidityReport validate(const Triangulation& t);

/// Multigraph on the tetrahedra with one arc per internal face pair.
/// Arcs are stored with endpoints sorted and listed in canonical order.
struct FacePairingGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> arcs;
};

FacePairingGraph face_pairing_graph(const Triangulation& t);

}  // namespace nsurf
