#include "nsurf/normal.hpp"

#include <algorithm>
#include <sstream>

namespace nsurf {

Int arc_count(const NormalVector& vec, int tet, int face, int v) {
    return vec.tri(tet, v) + vec.quad(tet, quad_through_pair(v, opposite_vertex(face)));
}

MatchingSystem matching_matrix(const Triangulation& t) {
    MatchingSystem m;
    m.cols = 7 * t.size();

    std::vector<std::pair<int, int>> sides;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f)
            if (t.is_glued(tet, f)) {
                const FaceGluing& g = t.gluing(tet, f);
                if (std::pair(tet, f) < std::pair(g.tet, g.face)) sides.emplace_back(tet, f);
            }
    std::sort(sides.begin(), sides.end());

    for (auto [tet, f] : sides) {
        const FaceGluing& g = t.gluing(tet, f);
        for (int v : face_vertices[static_cast<size_t>(f)]) {
            std::vector<int8_t> row(static_cast<size_t>(m.cols), 0);
            row[static_cast<size_t>(tri_coord(tet, v))] += 1;
            row[static_cast<size_t>(quad_coord(tet, quad_through_pair(v, opposite_vertex(f))))] += 1;
            int w = g.vertex_map[v];
            row[static_cast<size_t>(tri_coord(g.tet, w))] -= 1;
            row[static_cast<size_t>(
                quad_coord(g.tet, quad_through_pair(w, opposite_vertex(g.face))))] -= 1;
            m.rows.push_back(std::move(row));
            m.info.push_back({tet, f, v});
        }
    }
    return m;
}

bool satisfies_quad_constraints(const NormalVector& vec) {
    for (int tet = 0; tet < vec.tets(); ++tet) {
        int nz = 0;
        for (int q = 0; q < 3; ++q)
            if (vec.quad(tet, q) != 0) ++nz;
        if (nz > 1) return false;
    }
    return true;
}

bool in_matching_kernel(const MatchingSystem& m, const NormalVector& vec) {
    for (const auto& row : m.rows) {
        Int acc = 0;
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) acc += row[c] > 0 ? vec.coords[c] : -vec.coords[c];
        if (acc != 0) return false;
    }
    return true;
}

bool is_admissible(const Triangulation& t, const NormalVector& vec) {
    if (static_cast<int>(vec.coords.size()) != 7 * t.size())
        throw DimensionMismatch("normal vector has " + std::to_string(vec.coords.size()) +
                                " coordinates, expected " + std::to_string(7 * t.size()));
    for (const Int& x : vec.coords)
        if (x < 0) return false;
    if (!satisfies_quad_constraints(vec)) return false;
    return in_matching_kernel(matching_matrix(t), vec);
}

std::array<Int, 3> boundary_pattern(const Triangulation& t, const NormalVector& vec, int tet,
                                    int face) {
    if (tet < 0 || tet >= t.size() || face < 0 || face > 3 || !t.is_boundary(tet, face))
        throw NotABoundaryFace("face " + std::to_string(tet) + "(" + std::to_string(face) +
                               ") is not a boundary face");
    std::array<Int, 3> out;
    for (int i = 0; i < 3; ++i)
        out[static_cast<size_t>(i)] =
            arc_count(vec, tet, face, face_vertices[static_cast<size_t>(face)][static_cast<size_t>(i)]);
    return out;
}

Int edge_weight(const NormalVector& vec, int tet, int a, int b) {
    Int w = vec.tri(tet, a) + vec.tri(tet, b);
    for (int m : quads_crossing_edge(a, b)) w += vec.quad(tet, m);
    return w;
}

std::string format_normal_vector(const NormalVector& vec) {
    std::ostringstream out;
    for (int tet = 0; tet < vec.tets(); ++tet) {
        if (tet) out << ';';
        for (int v = 0; v < 4; ++v) {
            if (v) out << ',';
            out << vec.tri(tet, v);
        }
        out << '|';
        for (int q = 0; q < 3; ++q) {
            if (q) out << ',';
            out << vec.quad(tet, q);
        }
    }
    return out.str();
}

NormalVector parse_normal_vector(const std::string& text) {
    NormalVector vec;
    std::istringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, ';')) {
        size_t bar = block.find('|');
        if (bar == std::string::npos)
            throw SyntaxError("normal vector block missing '|': '" + block + "'");
        auto parse_list = [&](const std::string& s, int expect) {
            std::vector<Int> out;
            std::istringstream ls(s);
            std::string item;
            while (std::getline(ls, item, ',')) {
                try {
                    out.emplace_back(item);
                } catch (const std::exception&) {
                    throw SyntaxError("bad coordinate '" + item + "'");
                }
            }
            if (static_cast<int>(out.size()) != expect)
                throw SyntaxError("expected " + std::to_string(expect) + " coordinates in '" + s + "'");
            return out;
        };
        auto tris = parse_list(block.substr(0, bar), 4);
        auto quads = parse_list(block.substr(bar + 1), 3);
        for (auto& x : tris) vec.coords.push_back(std::move(x));
        for (auto& x : quads) vec.coords.push_back(std::move(x));
    }
    if (vec.coords.empty()) throw SyntaxError("empty normal vector");
    return vec;
}

}  // namespace nsurf
