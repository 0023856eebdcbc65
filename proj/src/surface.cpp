#include "nsurf/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "nsurf/skeleton.hpp"

namespace nsurf {

namespace {

constexpr long long kMaxCells = 2'000'000;

// --- per-type cell geometry -------------------------------------------------
//
// Triangle isolating X: corners 0..2 lie on tetrahedron edges {X, w} with the
// three w != X in ascending order; reference cycle is corner 0 -> 1 -> 2, and
// side j runs between corners j and j+1, lying on the face spanned by X and
// those two corners' second vertices.
//
// Quad of type m (separating P = {0, m+1} from Q = {a, b}, a < b): corners in
// reference cycle order are on cross edges (0,a), (0,b), (m+1,b), (m+1,a).

struct CellGeom {
    int corner_edge[4][2];  // corner local id -> tetrahedron edge endpoints
    int side_face[4];       // side local id -> face index
    int k;                  // 3 or 4
};

CellGeom cell_geom(int type) {
    CellGeom g{};
    if (type < 4) {
        int X = type;
        g.k = 3;
        int ws[3], wi = 0;
        for (int w = 0; w < 4; ++w)
            if (w != X) ws[wi++] = w;
        for (int j = 0; j < 3; ++j) {
            g.corner_edge[j][0] = X;
            g.corner_edge[j][1] = ws[j];
        }
        for (int j = 0; j < 3; ++j) g.side_face[j] = face_opposite(ws[(j + 2) % 3]);
    } else {
        int m = type - 4;
        int p = m + 1;
        int qa = -1, qb = -1;
        for (int v = 1; v < 4; ++v) {
            if (v == p) continue;
            (qa < 0 ? qa : qb) = v;
        }
        g.k = 4;
        int ce[4][2] = {{0, qa}, {0, qb}, {p, qb}, {p, qa}};
        for (int j = 0; j < 4; ++j) {
            g.corner_edge[j][0] = ce[j][0];
            g.corner_edge[j][1] = ce[j][1];
        }
        g.side_face[0] = face_opposite(p);
        g.side_face[1] = face_opposite(qa);
        g.side_face[2] = face_opposite(0);
        g.side_face[3] = face_opposite(qb);
    }
    return g;
}

int corner_on_edge(const CellGeom& g, int a, int b) {
    for (int j = 0; j < g.k; ++j) {
        if ((g.corner_edge[j][0] == a && g.corner_edge[j][1] == b) ||
            (g.corner_edge[j][0] == b && g.corner_edge[j][1] == a))
            return j;
    }
    throw Error("internal: cell has no corner on requested edge");
}

int side_on_face(const CellGeom& g, int face) {
    for (int j = 0; j < g.k; ++j)
        if (g.side_face[j] == face) return j;
    throw Error("internal: cell has no side on requested face");
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] =
                parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

SurfaceComplex reconstruct_surface(const Triangulation& t, const NormalVector& v) {
    if (!is_admissible(t, v)) throw NotAdmissible("vector is not an admissible normal coordinate");

    const int n = t.size();
    Int total = 0;
    for (const Int& c : v.coords) total += c;
    if (total > kMaxCells) throw TooLarge("surface has too many normal pieces to reconstruct");

    SurfaceComplex sc;
    // cell_base[(tet, type)] -> first global cell id of that block
    std::vector<long long> counts(static_cast<size_t>(7 * n));
    std::vector<int> base(static_cast<size_t>(7 * n));
    for (int c = 0; c < 7 * n; ++c) {
        counts[static_cast<size_t>(c)] = v.coords[static_cast<size_t>(c)].convert_to<long long>();
        base[static_cast<size_t>(c)] = static_cast<int>(sc.cells.size());
        for (long long i = 0; i < counts[static_cast<size_t>(c)]; ++i)
            sc.cells.push_back({c / 7, c % 7, i});
    }

    sc.corner_offset.resize(sc.cells.size() + 1);
    sc.corner_offset[0] = 0;
    for (size_t i = 0; i < sc.cells.size(); ++i)
        sc.corner_offset[i + 1] = sc.corner_offset[i] + sc.cells[i].side_count();
    UnionFind corners(sc.corner_offset.back());

    // The cell and side of the arc at stacking position p (counted outward
    // from vertex `vc`) on face `face` of `tet`.
    auto arc_cell = [&](int tet, int face, int vc, long long p) -> SurfaceComplex::ArcRef {
        long long tc = counts[static_cast<size_t>(tri_coord(tet, vc))];
        int type, idx_in_block;
        long long copy;
        if (p < tc) {
            type = vc;
            copy = p;
        } else {
            int m = quad_through_pair(vc, opposite_vertex(face));
            long long qc = counts[static_cast<size_t>(quad_coord(tet, m))];
            long long j = p - tc;
            assert(j < qc);
            bool vc_on_zero_side = (vc == 0 || vc == m + 1);
            copy = vc_on_zero_side ? j : qc - 1 - j;
            type = 4 + m;
        }
        idx_in_block = static_cast<int>(copy);
        int cell = base[static_cast<size_t>(7 * tet + type)] + idx_in_block;
        return {cell, side_on_face(cell_geom(type), face)};
    };

    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (t.is_boundary(tet, f)) {
                for (int vc : face_vertices[static_cast<size_t>(f)]) {
                    long long cnt = arc_count(v, tet, f, vc).convert_to<long long>();
                    for (long long p = 0; p < cnt; ++p) sc.boundary.push_back(arc_cell(tet, f, vc, p));
                }
                continue;
            }
            const FaceGluing& g = t.gluing(tet, f);
            if (std::pair(tet, f) > std::pair(g.tet, g.face)) continue;
            for (int vc : face_vertices[static_cast<size_t>(f)]) {
                long long cnt = arc_count(v, tet, f, vc).convert_to<long long>();
                int wc = g.vertex_map[vc];
                assert(cnt == arc_count(v, g.tet, g.face, wc).convert_to<long long>());
                // The two endpoints of the arc lie on the face edges at vc.
                int others[2], oi = 0;
                for (int x : face_vertices[static_cast<size_t>(f)])
                    if (x != vc) others[oi++] = x;
                for (long long p = 0; p < cnt; ++p) {
                    SurfaceComplex::ArcRef a = arc_cell(tet, f, vc, p);
                    SurfaceComplex::ArcRef b = arc_cell(g.tet, g.face, wc, p);
                    CellGeom ga = cell_geom(sc.cells[static_cast<size_t>(a.cell)].type);
                    CellGeom gb = cell_geom(sc.cells[static_cast<size_t>(b.cell)].type);
                    bool start_to_start = false;
                    for (int x : others) {
                        int ca = corner_on_edge(ga, vc, x);
                        int cb = corner_on_edge(gb, g.vertex_map[vc], g.vertex_map[x]);
                        corners.unite(sc.corner_offset[static_cast<size_t>(a.cell)] + ca,
                                      sc.corner_offset[static_cast<size_t>(b.cell)] + cb);
                        if (ca == a.side && cb == b.side) start_to_start = true;
                    }
                    sc.matched.push_back({a, b, start_to_start});
                }
            }
        }
    }

    sc.corner_class.resize(static_cast<size_t>(sc.corner_offset.back()));
    std::vector<int> root_id(static_cast<size_t>(sc.corner_offset.back()), -1);
    for (int s = 0; s < sc.corner_offset.back(); ++s) {
        int r = corners.find(s);
        if (root_id[static_cast<size_t>(r)] < 0) root_id[static_cast<size_t>(r)] = sc.corner_class_count++;
        sc.corner_class[static_cast<size_t>(s)] = root_id[static_cast<size_t>(r)];
    }
    return sc;
}

namespace {

TopologyClass::Component classify_component(long long euler, bool orientable, int boundary) {
    TopologyClass::Component c;
    c.euler = euler;
    c.orientable = orientable;
    c.boundary_curves = boundary;
    if (boundary == 0) {
        if (orientable) {
            c.genus = (2 - euler) / 2;
            c.kind = (c.genus == 0) ? SurfaceKind::Sphere : SurfaceKind::OrientableGenus;
        } else {
            c.genus = 2 - euler;
            c.kind = (c.genus == 1) ? SurfaceKind::ProjectivePlane : SurfaceKind::NonOrientableGenus;
        }
    } else {
        if (orientable) {
            c.genus = (2 - euler - boundary) / 2;
            if (c.genus == 0 && boundary == 1)
                c.kind = SurfaceKind::Disc;
            else if (c.genus == 0 && boundary == 2)
                c.kind = SurfaceKind::Cylinder;
            else
                c.kind = SurfaceKind::Other;
        } else {
            c.genus = 2 - euler - boundary;
            c.kind = (c.genus == 1 && boundary == 1) ? SurfaceKind::MobiusStrip : SurfaceKind::Other;
        }
    }
    return c;
}

}  // namespace

TopologyClass classify_surface(const SurfaceComplex& sc) {
    const int F = static_cast<int>(sc.cells.size());
    const int E = static_cast<int>(sc.matched.size() + sc.boundary.size());
    const int V = sc.corner_class_count;

    TopologyClass tc;
    tc.euler = V - E + F;
    if (F == 0) {
        tc.components = 0;
        tc.kind = SurfaceKind::Other;
        return tc;
    }

    // Components over cells joined by matched arcs.
    UnionFind comp(F);
    for (const auto& ma : sc.matched) comp.unite(ma.a.cell, ma.b.cell);
    std::vector<int> comp_id(static_cast<size_t>(F), -1);
    int ncomp = 0;
    for (int i = 0; i < F; ++i) {
        int r = comp.find(i);
        if (comp_id[static_cast<size_t>(r)] < 0) comp_id[static_cast<size_t>(r)] = ncomp++;
        comp_id[static_cast<size_t>(i)] = comp_id[static_cast<size_t>(r)];
    }
    tc.components = ncomp;

    // Orientability per component: propagate cell orientations across matched
    // arcs; compatible when the induced directions on the shared edge oppose.
    std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<size_t>(F));
    for (const auto& ma : sc.matched) {
        adj[static_cast<size_t>(ma.a.cell)].emplace_back(ma.b.cell, ma.start_to_start);
        adj[static_cast<size_t>(ma.b.cell)].emplace_back(ma.a.cell, ma.start_to_start);
    }
    std::vector<int> orient(static_cast<size_t>(F), 0);
    std::vector<bool> comp_orientable(static_cast<size_t>(ncomp), true);
    for (int s = 0; s < F; ++s) {
        if (orient[static_cast<size_t>(s)] != 0) continue;
        orient[static_cast<size_t>(s)] = 1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (auto [d, sts] : adj[static_cast<size_t>(c)]) {
                int want = sts ? -orient[static_cast<size_t>(c)] : orient[static_cast<size_t>(c)];
                if (orient[static_cast<size_t>(d)] == 0) {
                    orient[static_cast<size_t>(d)] = want;
                    stack.push_back(d);
                } else if (orient[static_cast<size_t>(d)] != want) {
                    comp_orientable[static_cast<size_t>(comp_id[static_cast<size_t>(c)])] = false;
                }
            }
        }
    }

    // Boundary curves: the boundary arcs form disjoint cycles through their
    // endpoint corner classes.
    UnionFind bcurve(sc.corner_class_count);
    std::vector<int> bdeg(static_cast<size_t>(sc.corner_class_count), 0);
    std::vector<int> comp_of_class(static_cast<size_t>(sc.corner_class_count), -1);
    for (const auto& ar : sc.boundary) {
        const auto& cell = sc.cells[static_cast<size_t>(ar.cell)];
        int k = cell.side_count();
        int c0 = sc.corner_class[static_cast<size_t>(sc.corner_offset[static_cast<size_t>(ar.cell)] + ar.side)];
        int c1 = sc.corner_class[static_cast<size_t>(sc.corner_offset[static_cast<size_t>(ar.cell)] +
                                                     (ar.side + 1) % k)];
        bcurve.unite(c0, c1);
        ++bdeg[static_cast<size_t>(c0)];
        ++bdeg[static_cast<size_t>(c1)];
        comp_of_class[static_cast<size_t>(c0)] = comp_id[static_cast<size_t>(ar.cell)];
        comp_of_class[static_cast<size_t>(c1)] = comp_id[static_cast<size_t>(ar.cell)];
    }
    for (int d : bdeg)
        if (d != 0 && d != 2) throw Error("internal: boundary corner of degree != 2");
    std::vector<int> comp_boundary(static_cast<size_t>(ncomp), 0);
    std::vector<bool> seen_root(static_cast<size_t>(sc.corner_class_count), false);
    int total_curves = 0;
    for (int c = 0; c < sc.corner_class_count; ++c) {
        if (bdeg[static_cast<size_t>(c)] == 0) continue;
        int r = bcurve.find(c);
        if (seen_root[static_cast<size_t>(r)]) continue;
        seen_root[static_cast<size_t>(r)] = true;
        ++total_curves;
        ++comp_boundary[static_cast<size_t>(comp_of_class[static_cast<size_t>(c)])];
    }
    tc.boundary_curves = total_curves;

    // Per-component Euler characteristics.
    std::vector<long long> cV(static_cast<size_t>(ncomp), 0), cE(static_cast<size_t>(ncomp), 0),
        cF(static_cast<size_t>(ncomp), 0);
    for (int i = 0; i < F; ++i) ++cF[static_cast<size_t>(comp_id[static_cast<size_t>(i)])];
    for (const auto& ma : sc.matched) ++cE[static_cast<size_t>(comp_id[static_cast<size_t>(ma.a.cell)])];
    for (const auto& ar : sc.boundary) ++cE[static_cast<size_t>(comp_id[static_cast<size_t>(ar.cell)])];
    std::vector<int> class_comp(static_cast<size_t>(sc.corner_class_count), -1);
    for (int i = 0; i < F; ++i) {
        for (int s = sc.corner_offset[static_cast<size_t>(i)]; s < sc.corner_offset[static_cast<size_t>(i) + 1];
             ++s)
            class_comp[static_cast<size_t>(sc.corner_class[static_cast<size_t>(s)])] =
                comp_id[static_cast<size_t>(i)];
    }
    for (int c = 0; c < sc.corner_class_count; ++c)
        if (class_comp[static_cast<size_t>(c)] >= 0)
            ++cV[static_cast<size_t>(class_comp[static_cast<size_t>(c)])];

    tc.orientable = true;
    for (int c = 0; c < ncomp; ++c) {
        auto ci = static_cast<size_t>(c);
        tc.per_component.push_back(
            classify_component(cV[ci] - cE[ci] + cF[ci], comp_orientable[ci], comp_boundary[ci]));
        tc.orientable = tc.orientable && comp_orientable[ci];
    }
    if (ncomp == 1) {
        tc.kind = tc.per_component[0].kind;
        tc.genus = tc.per_component[0].genus;
    } else {
        tc.kind = SurfaceKind::Other;
        tc.genus = -1;
    }
    return tc;
}

std::string kind_name(SurfaceKind kind, long long genus) {
    switch (kind) {
        case SurfaceKind::Disc: return "disc";
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::ProjectivePlane: return "projective-plane";
        case SurfaceKind::Cylinder: return "cylinder";
        case SurfaceKind::MobiusStrip: return "mobius-strip";
        case SurfaceKind::OrientableGenus: return "orientable-genus-" + std::to_string(genus);
        case SurfaceKind::NonOrientableGenus: return "nonorientable-genus-" + std::to_string(genus);
        default: return "other";
    }
}

std::string kind_name(const TopologyClass& tc) { return kind_name(tc.kind, tc.genus); }

Int euler_characteristic_linear(const Triangulation& t, const NormalVector& v) {
    SkeletonData sk = compute_skeleton(t);

    Int verts = 0;
    std::vector<bool> orbit_done(static_cast<size_t>(sk.edge_orbit_count), false);
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int e = 0; e < 6; ++e) {
            int orbit = sk.edge_orbit[static_cast<size_t>(6 * tet + e)];
            if (orbit_done[static_cast<size_t>(orbit)]) continue;
            orbit_done[static_cast<size_t>(orbit)] = true;
            verts += edge_weight(v, tet, edge_vertices[static_cast<size_t>(e)][0],
                                 edge_vertices[static_cast<size_t>(e)][1]);
        }
    }

    Int edges = 0;
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            bool counted = t.is_boundary(tet, f);
            if (!counted) {
                const FaceGluing& g = t.gluing(tet, f);
                counted = std::pair(tet, f) < std::pair(g.tet, g.face);
            }
            if (!counted) continue;
            for (int vc : face_vertices[static_cast<size_t>(f)]) edges += arc_count(v, tet, f, vc);
        }
    }

    Int faces = 0;
    for (const Int& c : v.coords) faces += c;
    return verts - edges + faces;
}

NormalVector vertex_link_vector(const Triangulation& t, int orbit) {
    SkeletonData sk = compute_skeleton(t);
    if (orbit < 0 || orbit >= sk.vertex_orbit_count)
        throw ParameterOutOfRange("vertex orbit out of range");
    NormalVector v(t.size());
    for (int tet = 0; tet < t.size(); ++tet)
        for (int c = 0; c < 4; ++c)
            if (sk.vertex_orbit_of(tet, c) == orbit) v.tri(tet, c) += 1;
    return v;
}

bool is_vertex_linking(const Triangulation& t, const NormalVector& v) {
    if (!is_admissible(t, v)) throw NotAdmissible("vector is not an admissible normal coordinate");
    for (int tet = 0; tet < v.tets(); ++tet)
        for (int q = 0; q < 3; ++q)
            if (v.quad(tet, q) != 0) return false;
    SkeletonData sk = compute_skeleton(t);
    for (int orbit = 0; orbit < sk.vertex_orbit_count; ++orbit) {
        NormalVector link(t.size());
        for (int tet = 0; tet < t.size(); ++tet)
            for (int c = 0; c < 4; ++c)
                if (sk.vertex_orbit_of(tet, c) == orbit) link.tri(tet, c) += 1;
        if (link == v) return true;
    }
    return false;
}

}  // namespace nsurf
