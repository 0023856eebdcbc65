#include "nsurf/skeleton.hpp"

#include <algorithm>
#include <numeric>

namespace nsurf {

const char* to_string(LinkClass c) {
    switch (c) {
        case LinkClass::Sphere: return "sphere";
        case LinkClass::Disc: return "disc";
        default: return "other";
    }
}

namespace {

/// Union-find; the edge variant carries a parity bit (relative orientation
/// to the parent) so that closing an orbit with reversed orientation is
/// detected.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

class SignedUnionFind {
public:
    explicit SignedUnionFind(int n)
        : parent_(static_cast<size_t>(n)), sign_(static_cast<size_t>(n), 1),
          bad_(static_cast<size_t>(n), false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    // Returns (root, sign of x relative to root).
    std::pair<int, int> find(int x) {
        if (parent_[static_cast<size_t>(x)] == x) return {x, 1};
        auto [root, s] = find(parent_[static_cast<size_t>(x)]);
        parent_[static_cast<size_t>(x)] = root;
        sign_[static_cast<size_t>(x)] = static_cast<int8_t>(s * sign_[static_cast<size_t>(x)]);
        return {root, sign_[static_cast<size_t>(x)]};
    }
    // Unite with x ~ rel * y.
    void unite(int x, int y, int rel) {
        auto [rx, sx] = find(x);
        auto [ry, sy] = find(y);
        if (rx == ry) {
            if (sx != rel * sy) bad_[static_cast<size_t>(rx)] = true;
            return;
        }
        parent_[static_cast<size_t>(rx)] = ry;
        sign_[static_cast<size_t>(rx)] = static_cast<int8_t>(rel * sx * sy);
        bad_[static_cast<size_t>(ry)] = bad_[static_cast<size_t>(ry)] || bad_[static_cast<size_t>(rx)];
    }
    bool bad(int x) { return bad_[static_cast<size_t>(find(x).first)]; }
    int sign_of(int x) { return find(x).second; }

private:
    std::vector<int> parent_;
    std::vector<int8_t> sign_;
    std::vector<bool> bad_;
};

// Encodes a corner of a vertex-link triangle: the corner of the link of
// vertex v in tetrahedron t lying on tetrahedron edge {v,w}.
constexpr int link_corner(int t, int v, int w) { return 16 * t + 4 * v + w; }

}  // namespace

SkeletonData compute_skeleton(const Triangulation& t) {
    const int n = t.size();
    SkeletonData sk;
    sk.boundary_faces = t.boundary_faces();

    // --- vertex orbits ---
    UnionFind vuf(4 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& g = t.gluing(tet, f);
            for (int v : face_vertices[static_cast<size_t>(f)])
                vuf.unite(4 * tet + v, 4 * g.tet + g.vertex_map[v]);
        }
    }
    sk.vertex_orbit.assign(static_cast<size_t>(4 * n), -1);
    std::vector<int> vroot_id(static_cast<size_t>(4 * n), -1);
    for (int s = 0; s < 4 * n; ++s) {
        int r = vuf.find(s);
        if (vroot_id[static_cast<size_t>(r)] < 0) vroot_id[static_cast<size_t>(r)] = sk.vertex_orbit_count++;
        sk.vertex_orbit[static_cast<size_t>(s)] = vroot_id[static_cast<size_t>(r)];
    }

    // --- edge orbits with orientation ---
    SignedUnionFind euf(6 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& g = t.gluing(tet, f);
            const auto& fv = face_vertices[static_cast<size_t>(f)];
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    int a = fv[static_cast<size_t>(i)], b = fv[static_cast<size_t>(j)];
                    int x = g.vertex_map[a], y = g.vertex_map[b];
                    int rel = (x < y) ? 1 : -1;
                    euf.unite(6 * tet + edge_index(a, b), 6 * g.tet + edge_index(x, y), rel);
                }
            }
        }
    }
    sk.edge_orbit.assign(static_cast<size_t>(6 * n), -1);
    sk.edge_sign.assign(static_cast<size_t>(6 * n), 1);
    std::vector<int> eroot_id(static_cast<size_t>(6 * n), -1);
    for (int s = 0; s < 6 * n; ++s) {
        int r = euf.find(s).first;
        if (eroot_id[static_cast<size_t>(r)] < 0) {
            eroot_id[static_cast<size_t>(r)] = sk.edge_orbit_count++;
            sk.edge_valid.push_back(!euf.bad(s));
            sk.edge_boundary.push_back(false);
        }
        sk.edge_orbit[static_cast<size_t>(s)] = eroot_id[static_cast<size_t>(r)];
        sk.edge_sign[static_cast<size_t>(s)] = static_cast<int8_t>(euf.sign_of(s));
    }
    for (int tet = 0; tet < n; ++tet) {
        for (int e = 0; e < 6; ++e) {
            int a = edge_vertices[static_cast<size_t>(e)][0], b = edge_vertices[static_cast<size_t>(e)][1];
            for (int f = 0; f < 4; ++f) {
                if (face_contains(f, a) && face_contains(f, b) && t.is_boundary(tet, f))
                    sk.edge_boundary[static_cast<size_t>(sk.edge_orbit[static_cast<size_t>(6 * tet + e)])] = true;
            }
        }
    }

    // --- vertex links as combinatorial surfaces ---
    // Cells: one triangle per corner (tet, v).  Sides: (tet, v, f) with f
    // containing v, matched across face gluings.  Corners: (tet, v, w),
    // identified whenever a glued face contains both v and w.
    UnionFind cuf(16 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& g = t.gluing(tet, f);
            const auto& fv = face_vertices[static_cast<size_t>(f)];
            for (int v : fv)
                for (int w : fv)
                    if (v != w)
                        cuf.unite(link_corner(tet, v, w),
                                  link_corner(g.tet, g.vertex_map[v], g.vertex_map[w]));
        }
    }

    std::vector<int> faces(static_cast<size_t>(sk.vertex_orbit_count), 0);
    std::vector<int> edges(static_cast<size_t>(sk.vertex_orbit_count), 0);
    std::vector<int> verts(static_cast<size_t>(sk.vertex_orbit_count), 0);
    sk.link_has_boundary.assign(static_cast<size_t>(sk.vertex_orbit_count), false);

    std::vector<bool> corner_seen(static_cast<size_t>(16 * n), false);
    for (int tet = 0; tet < n; ++tet) {
        for (int v = 0; v < 4; ++v) {
            int orbit = sk.vertex_orbit_of(tet, v);
            ++faces[static_cast<size_t>(orbit)];
            for (int f = 0; f < 4; ++f) {
                if (!face_contains(f, v)) continue;
                if (t.is_boundary(tet, f)) {
                    ++edges[static_cast<size_t>(orbit)];
                    sk.link_has_boundary[static_cast<size_t>(orbit)] = true;
                } else {
                    const FaceGluing& g = t.gluing(tet, f);
                    // Count each matched side pair once, from its smaller slot.
                    long self_key = 16L * tet + 4L * v + f;
                    long other_key = 16L * g.tet + 4L * g.vertex_map[v] + g.face;
                    if (self_key <= other_key) ++edges[static_cast<size_t>(orbit)];
                }
            }
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                int root = cuf.find(link_corner(tet, v, w));
                if (!corner_seen[static_cast<size_t>(root)]) {
                    corner_seen[static_cast<size_t>(root)] = true;
                    ++verts[static_cast<size_t>(orbit)];
                }
            }
        }
    }

    sk.link_euler.resize(static_cast<size_t>(sk.vertex_orbit_count));
    sk.link_class.resize(static_cast<size_t>(sk.vertex_orbit_count));
    for (int o = 0; o < sk.vertex_orbit_count; ++o) {
        auto idx = static_cast<size_t>(o);
        int chi = verts[idx] - edges[idx] + faces[idx];
        sk.link_euler[idx] = chi;
        if (sk.link_has_boundary[idx])
            sk.link_class[idx] = (chi == 1) ? LinkClass::Disc : LinkClass::Other;
        else
            sk.link_class[idx] = (chi == 2) ? LinkClass::Sphere : LinkClass::Other;
    }
    return sk;
}

std::vector<LinkClass> classify_vertex_links(const Triangulation& t) {
    return compute_skeleton(t).link_class;
}

ValidityReport validate(const Triangulation& t) {
    ValidityReport r;
    r.skeleton = compute_skeleton(t);
    r.all_edges_valid =
        std::all_of(r.skeleton.edge_valid.begin(), r.skeleton.edge_valid.end(), [](bool b) { return b; });
    r.all_links_sphere_or_disc =
        std::all_of(r.skeleton.link_class.begin(), r.skeleton.link_class.end(),
                    [](LinkClass c) { return c != LinkClass::Other; });
    r.connected = t.is_connected();
    r.is_3manifold = r.all_edges_valid && r.all_links_sphere_or_disc && r.connected;
    bool has_boundary = !r.skeleton.boundary_faces.empty();
    r.is_closed = r.is_3manifold && !has_boundary;
    r.is_bounded = r.is_3manifold && has_boundary;
    return r;
}

FacePairingGraph face_pairing_graph(const Triangulation& t) {
    FacePairingGraph g;
    g.nodes = t.size();
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& fg = t.gluing(tet, f);
            if (std::pair(tet, f) <= std::pair(fg.tet, fg.face))
                g.arcs.emplace_back(std::min(tet, fg.tet), std::max(tet, fg.tet));
        }
    }
    return g;
}

}  // namespace nsurf
