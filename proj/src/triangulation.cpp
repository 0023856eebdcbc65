#include "nsurf/triangulation.hpp"

#include <cctype>
#include <sstream>

namespace nsurf {

namespace {

bool map_carries_face(const Perm4& map, int face, int face2) {
    // The three source-face vertices must land exactly on the target face,
    // equivalently the opposite vertex maps to the opposite vertex.
    return map[opposite_vertex(face)] == opposite_vertex(face2);
}

}  // namespace

void Triangulation::glue(int tet, int face, int tet2, int face2, Perm4 map) {
    if (tet == tet2 && face == face2) throw SelfGluedFace("face glued to itself");
    if (!map_carries_face(map, face, face2))
        throw InconsistentGluing("vertex map does not carry source face onto target face");
    if (is_glued(tet, face) || is_glued(tet2, face2))
        throw InconsistentGluing("face already glued");
    slot(tet, face) = FaceGluing{tet2, face2, map};
    slot(tet2, face2) = FaceGluing{tet, face, map.inverse()};
}

void Triangulation::unglue(int tet, int face) {
    if (!is_glued(tet, face)) return;
    FaceGluing g = gluing(tet, face);
    slot(g.tet, g.face).reset();
    slot(tet, face).reset();
}

int Triangulation::boundary_face_count() const {
    int c = 0;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (is_boundary(t, f)) ++c;
    return c;
}

std::vector<std::pair<int, int>> Triangulation::boundary_faces() const {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (is_boundary(t, f)) out.emplace_back(t, f);
    return out;
}

bool Triangulation::is_connected() const {
    std::vector<bool> seen(static_cast<size_t>(size()), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            if (!is_glued(t, f)) continue;
            int u = gluing(t, f).tet;
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = true;
                stack.push_back(u);
            }
        }
    }
    for (bool b : seen)
        if (!b) return false;
    return true;
}

namespace {

struct RawEntry {
    int tet;
    std::array<int, 3> verts;
};

// Parses one face entry, either "-" or "j(xyz)".
std::optional<RawEntry> parse_entry(const std::string& tok, int line_no) {
    if (tok == "-") return std::nullopt;
    size_t open = tok.find('(');
    if (open == std::string::npos || tok.back() != ')' || open == 0)
        throw SyntaxError("line " + std::to_string(line_no) + ": malformed entry '" + tok + "'");
    RawEntry e{};
    try {
        size_t used = 0;
        e.tet = std::stoi(tok.substr(0, open), &used);
        if (used != open) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw SyntaxError("line " + std::to_string(line_no) + ": bad tetrahedron index in '" + tok + "'");
    }
    std::string inner = tok.substr(open + 1, tok.size() - open - 2);
    if (inner.size() != 3)
        throw SyntaxError("line " + std::to_string(line_no) + ": expected three vertices in '" + tok + "'");
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 3; ++i) {
        char c = inner[static_cast<size_t>(i)];
        if (c < '0' || c > '3')
            throw SyntaxError("line " + std::to_string(line_no) + ": bad vertex '" + std::string(1, c) + "'");
        e.verts[static_cast<size_t>(i)] = c - '0';
        if (seen[c - '0'])
            throw SyntaxError("line " + std::to_string(line_no) + ": repeated vertex in '" + tok + "'");
        seen[c - '0'] = true;
    }
    return e;
}

}  // namespace

Triangulation parse_gluing_table(std::istream& in) {
    struct Row {
        int tet;
        std::array<std::optional<RawEntry>, 4> entries;
    };
    std::vector<Row> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head.empty() || head.back() != ':')
            throw SyntaxError("line " + std::to_string(line_no) + ": expected 'i:' row label");
        int tet = 0;
        try {
            size_t used = 0;
            tet = std::stoi(head.substr(0, head.size() - 1), &used);
            if (used + 1 != head.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw SyntaxError("line " + std::to_string(line_no) + ": bad row label '" + head + "'");
        }
        Row row{tet, {}};
        for (int f = 0; f < 4; ++f) {
            std::string tok;
            if (!(ls >> tok))
                throw SyntaxError("line " + std::to_string(line_no) + ": expected four face entries");
            row.entries[static_cast<size_t>(f)] = parse_entry(tok, line_no);
        }
        std::string extra;
        if (ls >> extra)
            throw SyntaxError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        rows.push_back(row);
    }
    if (rows.empty()) throw SyntaxError("empty gluing table");

    int n = static_cast<int>(rows.size());
    std::vector<bool> have(static_cast<size_t>(n), false);
    for (const Row& r : rows) {
        if (r.tet < 0 || r.tet >= n)
            throw SyntaxError("row label " + std::to_string(r.tet) + " out of range for " +
                              std::to_string(n) + " rows");
        if (have[static_cast<size_t>(r.tet)])
            throw SyntaxError("duplicate row for tetrahedron " + std::to_string(r.tet));
        have[static_cast<size_t>(r.tet)] = true;
    }

    Triangulation t(n);
    for (const Row& r : rows) {
        for (int f = 0; f < 4; ++f) {
            const auto& e = r.entries[static_cast<size_t>(f)];
            if (!e) continue;
            if (e->tet < 0 || e->tet >= n)
                throw SyntaxError("gluing target " + std::to_string(e->tet) + " out of range");
            // Build the full vertex map from the three face vertices plus
            // opposite -> opposite.
            int img[4] = {-1, -1, -1, -1};
            for (int i = 0; i < 3; ++i)
                img[face_vertices[static_cast<size_t>(f)][static_cast<size_t>(i)]] =
                    e->verts[static_cast<size_t>(i)];
            int target_face = -1;
            {
                bool used[4] = {false, false, false, false};
                for (int i = 0; i < 3; ++i) used[e->verts[static_cast<size_t>(i)]] = true;
                for (int v = 0; v < 4; ++v)
                    if (!used[v]) target_face = face_opposite(v);
            }
            img[opposite_vertex(f)] = opposite_vertex(target_face);
            Perm4 map(img[0], img[1], img[2], img[3]);

            if (e->tet == r.tet && target_face == f)
                throw SelfGluedFace("tetrahedron " + std::to_string(r.tet) + " face glued to itself");

            if (t.is_glued(r.tet, f)) {
                // Already installed from the partner row: the table must agree.
                const FaceGluing& g = t.gluing(r.tet, f);
                if (g.tet != e->tet || g.face != target_face || !(g.vertex_map == map))
                    throw InconsistentGluing("gluing of tetrahedron " + std::to_string(r.tet) +
                                             " face " + std::to_string(f) +
                                             " disagrees with its partner entry");
                continue;
            }
            if (t.is_glued(e->tet, target_face))
                throw InconsistentGluing("two faces glued to tetrahedron " + std::to_string(e->tet) +
                                         " face " + std::to_string(target_face));
            t.glue(r.tet, f, e->tet, target_face, map);
        }
    }

    // Every gluing must have been listed consistently from both rows; an
    // entry missing on the partner side is an involution violation.
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& g = t.gluing(tet, f);
            const auto& back = rows[static_cast<size_t>(g.tet)].entries[static_cast<size_t>(g.face)];
            if (!back)
                throw InconsistentGluing("tetrahedron " + std::to_string(g.tet) + " face " +
                                         std::to_string(g.face) + " is glued but listed as boundary");
        }
    }
    return t;
}

Triangulation parse_gluing_table(const std::string& text) {
    std::istringstream in(text);
    return parse_gluing_table(in);
}

std::string format_gluing_table(const Triangulation& t) {
    std::ostringstream out;
    for (int tet = 0; tet < t.size(); ++tet) {
        out << tet << ':';
        for (int f = 0; f < 4; ++f) {
            out << ' ';
            if (t.is_boundary(tet, f)) {
                out << '-';
                continue;
            }
            const FaceGluing& g = t.gluing(tet, f);
            out << g.tet << '(';
            for (int i = 0; i < 3; ++i)
                out << g.vertex_map[face_vertices[static_cast<size_t>(f)][static_cast<size_t>(i)]];
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace nsurf
