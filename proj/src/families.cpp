#include "nsurf/families.hpp"

#include <algorithm>

#include "nsurf/enumerate.hpp"
#include "nsurf/skeleton.hpp"

namespace nsurf {

Triangulation build_binomial(int n) {
    if (n < 1) throw ParameterOutOfRange("binomial family needs n >= 1");
    Triangulation t(n);
    for (int i = 0; i < n; ++i) {
        t.glue(i, 0, i, 1, Perm4(0, 1, 3, 2));               // i(012) -> i(013)
        t.glue(i, 3, (i + 1) % n, 2, Perm4(1, 2, 3, 0));     // i(123) -> (i+1)(230)
    }
    return t;
}

Triangulation build_path(int n) {
    if (n < 1) throw ParameterOutOfRange("path family needs n >= 1");
    Triangulation t(n);
    for (int i = 0; i + 1 < n; ++i) t.glue(i, 0, i + 1, 1, Perm4(0, 1, 3, 2));
    return t;
}

namespace {

// Frozen by a development-time search over the one-tetrahedron folds and
// layering maps; the meridian-disc tests (max coordinate F_{n+1}, boundary
// edge intersections F_{n+1}, F_{n+2}, F_{n+3}) pin these down.
struct LstFrozen {
    int base_f1, base_f2;
    Perm4 base_map;
    int bdry_fa, bdry_fb;  // boundary faces of every B_n (on the last tetrahedron)
    Perm4 layer_ma;        // new tet face base_f1 -> previous (last-1, bdry_fa)
    Perm4 layer_mb;        // new tet face base_f2 -> previous (last-1, bdry_fb)
};

// Placeholder values; replaced once the development search has run.
constexpr bool kLstFrozenReady = false;
const LstFrozen kLst = {0, 1, Perm4(), 2, 3, Perm4(), Perm4()};

struct ClosedCFrozen {
    // Gluing of the two boundary faces of B_{n-4} onto the boundary faces of
    // E: bdry_fa -> e_first ? boundary_1 : boundary_2, with the given maps.
    bool fa_to_d1;
    Perm4 map_a, map_b;
};

constexpr bool kClosedCFrozenReady = false;
const ClosedCFrozen kClosedC = {true, Perm4(), Perm4()};

}  // namespace

Triangulation build_fib_lst(int n) {
    if (n < 1) throw ParameterOutOfRange("layered solid torus family needs n >= 1");
    if (!kLstFrozenReady) throw Error("internal: LST gluing constants not frozen yet");
    Triangulation t(n);
    t.glue(0, kLst.base_f1, 0, kLst.base_f2, kLst.base_map);
    for (int k = 1; k < n; ++k) {
        t.glue(k, kLst.base_f1, k - 1, kLst.bdry_fa, kLst.layer_ma);
        t.glue(k, kLst.base_f2, k - 1, kLst.bdry_fb, kLst.layer_mb);
    }
    return t;
}

std::pair<std::pair<int, int>, std::pair<int, int>> lst_boundary_faces(int n) {
    auto a = std::pair(n - 1, kLst.bdry_fa);
    auto b = std::pair(n - 1, kLst.bdry_fb);
    return a < b ? std::pair(a, b) : std::pair(b, a);
}

namespace {

constexpr const char* kTableG = R"(
0: - 1(012) 2(021) -
1: 0(013) 3(012) 4(021) -
2: 0(032) 5(012) 6(021) -
3: 1(013) 7(231) 7(023) -
4: 1(032) 8(231) 8(023) -
5: 2(013) 9(231) 9(023) -
6: 2(032) 10(231) 10(023) -
7: - - 3(023) 3(301)
8: - - 4(023) 4(301)
9: - - 5(023) 5(301)
10: - - 6(023) 6(301)
)";

constexpr const char* kTableE = R"(
0: 2(231) 1(230) 2(023) 1(123)
1: 3(012) 2(102) 0(301) 0(123)
2: 1(103) 3(230) 0(023) 0(201)
3: 1(012) - 2(301) -
)";

}  // namespace

Triangulation build_g11() { return parse_gluing_table(kTableG); }

Triangulation build_plug_e() { return parse_gluing_table(kTableE); }

Triangulation build_closed_c(int n) {
    if (n < 5) throw ParameterOutOfRange("closed family needs n >= 5");
    if (!kClosedCFrozenReady) throw Error("internal: closed-family gluing constants not frozen yet");
    const int m = n - 4;
    Triangulation b = build_fib_lst(m);
    auto [bfa, bfb] = lst_boundary_faces(m);

    Triangulation t(n);
    for (int tet = 0; tet < m; ++tet)
        for (int f = 0; f < 4; ++f)
            if (b.is_glued(tet, f) && !t.is_glued(tet, f)) {
                const FaceGluing& g = b.gluing(tet, f);
                t.glue(tet, f, g.tet, g.face, g.vertex_map);
            }
    Triangulation e = build_plug_e();
    for (int tet = 0; tet < 4; ++tet)
        for (int f = 0; f < 4; ++f)
            if (e.is_glued(tet, f) && !t.is_glued(m + tet, f)) {
                const FaceGluing& g = e.gluing(tet, f);
                t.glue(m + tet, f, m + g.tet, g.face, g.vertex_map);
            }

    const int d1_tet = m + 3, d1_face = 1;  // E boundary face 3(013)
    const int d2_tet = m + 3, d2_face = 3;  // E boundary face 3(123)
    if (kClosedC.fa_to_d1) {
        t.glue(bfa.first, bfa.second, d1_tet, d1_face, kClosedC.map_a);
        t.glue(bfb.first, bfb.second, d2_tet, d2_face, kClosedC.map_b);
    } else {
        t.glue(bfa.first, bfa.second, d2_tet, d2_face, kClosedC.map_a);
        t.glue(bfb.first, bfb.second, d1_tet, d1_face, kClosedC.map_b);
    }
    return t;
}

TreeContext tree_seed_free() {
    TreeContext ctx;
    ctx.tri = Triangulation(1);
    ctx.face_tet = 0;
    ctx.face_idx = 0;
    ctx.arc_vertex = 0;
    ctx.alpha = 2;
    return ctx;
}

TreeContext tree_context_for_g() {
    TreeContext ctx;
    ctx.tri = build_g11();
    ctx.face_tet = 0;
    ctx.face_idx = 0;
    ctx.arc_vertex = 0;
    ctx.alpha = 31643;
    return ctx;
}

TreeContext tree_extend(const TreeContext& ctx) {
    const Triangulation& g = ctx.tri;
    const int n = g.size();
    if (!g.is_boundary(ctx.face_tet, ctx.face_idx))
        throw PreconditionViolated("designated face is not a boundary face");

    SkeletonData sk = compute_skeleton(g);
    const auto& fv = face_vertices[static_cast<size_t>(ctx.face_idx)];
    int vc = ctx.arc_vertex;
    if (!face_contains(ctx.face_idx, vc))
        throw PreconditionViolated("designated arc vertex is not on the face");
    int others[2], oi = 0;
    for (int x : fv)
        if (x != vc) others[oi++] = x;

    auto identified = [&](int a, int b) {
        return sk.vertex_orbit_of(ctx.face_tet, a) == sk.vertex_orbit_of(ctx.face_tet, b);
    };
    bool all_same = identified(fv[0], fv[1]) && identified(fv[1], fv[2]);
    if (all_same)
        throw PreconditionViolated("all three vertices of the designated face are identified");

    // The identified pair on the face, if any (at most one, else all three).
    int pair_a = -1, pair_b = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (identified(fv[i], fv[j])) {
                pair_a = fv[i];
                pair_b = fv[j];
            }
    bool pair_has_vc = (pair_a == vc || pair_b == vc);
    int vc_partner = pair_has_vc ? (pair_a == vc ? pair_b : pair_a) : -1;

    const int root = 2 * n;

    // Enumerate attachments in lexicographic order of
    // (face_a, face_b, w, map_a, map_b) and keep the first legal one.
    for (int fa = 0; fa < 4; ++fa) {
        for (int fb = 0; fb < 4; ++fb) {
            if (fa == fb) continue;
            // Shared edge of the two root faces.
            int shared[2], si = 0;
            for (int v = 0; v < 4; ++v)
                if (face_contains(fa, v) && face_contains(fb, v)) shared[si++] = v;
            for (int wi = 0; wi < 2; ++wi) {
                int w = shared[wi];
                int wprime = shared[1 - wi];
                int ua = opposite_vertex(fb);  // vertex of fa off the shared edge
                int ub = opposite_vertex(fa);
                for (int swap_a = 0; swap_a < 2; ++swap_a) {
                    for (int swap_b = 0; swap_b < 2; ++swap_b) {
                        // Copy A maps vc -> w, others -> {wprime, ua}.
                        int a_to[2] = {swap_a ? ua : wprime, swap_a ? wprime : ua};
                        int b_to[2] = {swap_b ? ub : wprime, swap_b ? wprime : ub};

                        auto image_a = [&](int v) {
                            if (v == vc) return w;
                            return v == others[0] ? a_to[0] : a_to[1];
                        };
                        auto image_b = [&](int v) {
                            if (v == vc) return w;
                            return v == others[0] ? b_to[0] : b_to[1];
                        };

                        if (pair_has_vc) {
                            // One copy joins both identified vertices to the
                            // shared edge, the other only one of them.
                            bool a_on = image_a(vc_partner) == wprime;
                            bool b_on = image_b(vc_partner) == wprime;
                            if (a_on == b_on) continue;
                        } else {
                            // Endpoints of the shared edge must not be
                            // previously identified in both copies.
                            int pre_a = image_a(others[0]) == wprime ? others[0] : others[1];
                            int pre_b = image_b(others[0]) == wprime ? others[0] : others[1];
                            if (identified(vc, pre_a) && identified(vc, pre_b)) continue;
                        }

                        Triangulation cand(2 * n + 1);
                        for (int tet = 0; tet < n; ++tet)
                            for (int f = 0; f < 4; ++f)
                                if (g.is_glued(tet, f) && !cand.is_glued(tet, f)) {
                                    const FaceGluing& fg = g.gluing(tet, f);
                                    cand.glue(tet, f, fg.tet, fg.face, fg.vertex_map);
                                    if (!cand.is_glued(n + tet, f))
                                        cand.glue(n + tet, f, n + fg.tet, fg.face, fg.vertex_map);
                                }
                        auto full_map = [&](auto&& image) {
                            int img[4];
                            for (int v : fv) img[v] = image(v);
                            img[opposite_vertex(ctx.face_idx)] = -1;
                            bool used[4] = {false, false, false, false};
                            for (int v : fv) used[img[v]] = true;
                            for (int v = 0; v < 4; ++v)
                                if (!used[v]) img[opposite_vertex(ctx.face_idx)] = v;
                            return Perm4(img[0], img[1], img[2], img[3]);
                        };
                        cand.glue(ctx.face_tet, ctx.face_idx, root, fa, full_map(image_a));
                        cand.glue(n + ctx.face_tet, ctx.face_idx, root, fb, full_map(image_b));

                        ValidityReport rep = validate(cand);
                        if (!rep.is_bounded) continue;

                        // New designated face: the third root face containing w.
                        int fnew = -1;
                        for (int f = 0; f < 4; ++f)
                            if (f != fa && f != fb && face_contains(f, w)) fnew = f;
                        if (fnew < 0 || !cand.is_boundary(root, fnew)) continue;
                        SkeletonData sk2 = compute_skeleton(cand);
                        const auto& nfv = face_vertices[static_cast<size_t>(fnew)];
                        bool new_all_same =
                            sk2.vertex_orbit_of(root, nfv[0]) == sk2.vertex_orbit_of(root, nfv[1]) &&
                            sk2.vertex_orbit_of(root, nfv[1]) == sk2.vertex_orbit_of(root, nfv[2]);
                        if (new_all_same) continue;

                        TreeContext out;
                        out.tri = std::move(cand);
                        out.face_tet = root;
                        out.face_idx = fnew;
                        out.arc_vertex = w;
                        out.alpha = ctx.alpha * ctx.alpha;
                        return out;
                    }
                }
            }
        }
    }
    throw PreconditionViolated("no legal attachment found for tree extension");
}

Triangulation build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Binomial: return build_binomial(spec.parameter);
        case FamilyKind::Path: return build_path(spec.parameter);
        case FamilyKind::FibLST: return build_fib_lst(spec.parameter);
        case FamilyKind::G: return build_g11();
        case FamilyKind::E: return build_plug_e();
        case FamilyKind::ClosedC: return build_closed_c(spec.parameter);
        case FamilyKind::TreeStep: {
            if (spec.parameter < 0) throw ParameterOutOfRange("tree-step needs k >= 0");
            TreeContext ctx = tree_seed_free();
            for (int i = 0; i < spec.parameter; ++i) ctx = tree_extend(ctx);
            return ctx.tri;
        }
    }
    throw ParameterOutOfRange("unknown family");
}

}  // namespace nsurf
