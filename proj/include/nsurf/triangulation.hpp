#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsurf/errors.hpp"
#include "nsurf/perm4.hpp"

namespace nsurf {

/// Face f of a tetrahedron is the triangle spanned by face_vertices[f],
/// listed in ascending order.  Face indices follow the gluing-table column
/// order: (012), (013), (023), (123).  The vertex opposite face f is 3 - f.
inline constexpr std::array<std::array<int, 3>, 4> face_vertices = {{
    {0, 1, 2},
    {0, 1, 3},
    {0, 2, 3},
    {1, 2, 3},
}};

constexpr int opposite_vertex(int face) { return 3 - face; }
constexpr int face_opposite(int vertex) { return 3 - vertex; }

inline constexpr std::array<std::array<int, 2>, 6> edge_vertices = {{
    {0, 1},
    {0, 2},
    {0, 3},
    {1, 2},
    {1, 3},
    {2, 3},
}};

constexpr int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    constexpr int lut[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return lut[a][b];
}

constexpr bool face_contains(int face, int v) { return v != opposite_vertex(face); }

/// One side of a face identification: the partner face together with the
/// vertex bijection carrying this tetrahedron's vertices onto the partner's.
struct FaceGluing {
    int tet = 0;
    int face = 0;
    Perm4 vertex_map;

    friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

/// A generalised triangulation: n abstract tetrahedra, faces glued in pairs.
/// The gluing table is kept involutive at all times: installing one side of
/// a gluing installs the inverse on the partner slot.
class Triangulation {
public:
    explicit Triangulation(int n) : gluings_(static_cast<size_t>(check_size(n))) {}

    int size() const { return static_cast<int>(gluings_.size()); }

    bool is_glued(int tet, int face) const { return slot(tet, face).has_value(); }
    bool is_boundary(int tet, int face) const { return !is_glued(tet, face); }

    const FaceGluing& gluing(int tet, int face) const { return *slot(tet, face); }

    /// Installs the gluing (tet, face) -> (tet2, face2) with the given full
    /// vertex map, plus its inverse on the partner slot.  The map must carry
    /// the source face onto the target face.
    void glue(int tet, int face, int tet2, int face2, Perm4 map);

    /// Removes a gluing (both sides).  Used by backtracking searches.
    void unglue(int tet, int face);

    int boundary_face_count() const;
    std::vector<std::pair<int, int>> boundary_faces() const;
    int internal_face_pair_count() const { return (4 * size() - boundary_face_count()) / 2; }

    /// True when the face pairing graph is connected.
    bool is_connected() const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    static int check_size(int n) {
        if (n < 1) throw ParameterOutOfRange("triangulation needs at least one tetrahedron");
        return n;
    }
    const std::optional<FaceGluing>& slot(int tet, int face) const {
        return gluings_.at(static_cast<size_t>(tet))[static_cast<size_t>(face)];
    }
    std::optional<FaceGluing>& slot(int tet, int face) {
        return gluings_.at(static_cast<size_t>(tet))[static_cast<size_t>(face)];
    }

    std::vector<std::array<std::optional<FaceGluing>, 4>> gluings_;
};

/// Parses the gluing-table text format: one line per tetrahedron,
///   i: A B C D
/// with the four slots for faces i(012), i(013), i(023), i(123) and each
/// entry either j(xyz) or `-` for a boundary face.  `#` starts a comment.
/// The table must already be involutive; inconsistent partner entries are
/// rejected rather than repaired.
Triangulation parse_gluing_table(const std::string& text);
Triangulation parse_gluing_table(std::istream& in);

std::string format_gluing_table(const Triangulation& t);

}  // namespace nsurf
