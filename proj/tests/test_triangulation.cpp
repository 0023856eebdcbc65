#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsurf/families.hpp"
#include "nsurf/signature.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/triangulation.hpp"

using namespace nsurf;

TEST_CASE("perm4 basics") {
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::from_index(i);
        CHECK(p.index() == i);
        CHECK((p * p.inverse()).is_identity());
    }
    Perm4 p(1, 2, 3, 0), q(0, 1, 3, 2);
    CHECK((p * q)[2] == 0);  // p[q[2]] = p[3]
}

TEST_CASE("free tetrahedron") {
    Triangulation t(1);
    CHECK(t.boundary_face_count() == 4);
    SkeletonData sk = compute_skeleton(t);
    CHECK(sk.vertex_orbit_count == 4);
    CHECK(sk.edge_orbit_count == 6);
    auto links = classify_vertex_links(t);
    for (LinkClass c : links) CHECK(c == LinkClass::Disc);
    ValidityReport r = validate(t);
    CHECK(r.is_3manifold);
    CHECK(r.is_bounded);
    CHECK_FALSE(r.is_closed);
    FacePairingGraph g = face_pairing_graph(t);
    CHECK(g.nodes == 1);
    CHECK(g.arcs.empty());
}

TEST_CASE("gluing table parse: G from the eleven-row table") {
    Triangulation g = build_g11();
    CHECK(g.size() == 11);
    CHECK(g.boundary_face_count() == 16);
    CHECK(g.internal_face_pair_count() == 14);
    ValidityReport r = validate(g);
    CHECK(r.is_3manifold);
    CHECK(r.is_bounded);
    // f0 = 0(012) must be a usable tree-lemma face: boundary, not all three
    // vertices identified.
    CHECK(g.is_boundary(0, 0));

    // Round trip through the text format.
    Triangulation g2 = parse_gluing_table(format_gluing_table(g));
    CHECK(g2 == g);
}

TEST_CASE("gluing table parse: E") {
    Triangulation e = build_plug_e();
    CHECK(e.size() == 4);
    CHECK(e.boundary_face_count() == 2);
    CHECK(e.is_boundary(3, 1));  // boundary_1 = 3(013)
    CHECK(e.is_boundary(3, 3));  // boundary_2 = 3(123)
    ValidityReport r = validate(e);
    CHECK(r.is_3manifold);
    CHECK(r.is_bounded);
}

TEST_CASE("gluing table rejects") {
    CHECK_THROWS_AS(parse_gluing_table("0: x y z w\n"), SyntaxError);
    CHECK_THROWS_AS(parse_gluing_table("0: 0(012) - - -\n"), SelfGluedFace);
    // Partner disagrees: 0(012)->1(012) but 1 claims 1(012)->0(013).
    CHECK_THROWS_AS(parse_gluing_table("0: 1(012) - - -\n"
                                       "1: 0(013) - - -\n"),
                    InconsistentGluing);
    // Partner lists the glued face as boundary.
    CHECK_THROWS_AS(parse_gluing_table("0: 1(012) - - -\n"
                                       "1: - - - -\n"),
                    InconsistentGluing);
    // One free tetrahedron parses.
    Triangulation t = parse_gluing_table("# comment\n0: - - - -\n");
    CHECK(t.size() == 1);
    CHECK(t.boundary_face_count() == 4);
}

TEST_CASE("binomial family structure") {
    for (int n = 1; n <= 6; ++n) {
        Triangulation a = build_binomial(n);
        CHECK(a.size() == n);
        ValidityReport r = validate(a);
        CHECK(r.is_3manifold);
        CHECK(r.is_closed);
        SkeletonData sk = compute_skeleton(a);
        CHECK(sk.vertex_orbit_count == 1);
        for (LinkClass c : sk.link_class) CHECK(c == LinkClass::Sphere);
    }
    // Face pairing graph of A_n: one loop plus two arcs to the cyclic
    // neighbours at every node.
    Triangulation a6 = build_binomial(6);
    FacePairingGraph g = face_pairing_graph(a6);
    CHECK(g.nodes == 6);
    int loops = 0;
    for (auto [u, v] : g.arcs)
        if (u == v) ++loops;
    CHECK(loops == 6);
    CHECK(static_cast<int>(g.arcs.size()) == 12);  // (4*6 - 0)/2
}

TEST_CASE("path family structure") {
    for (int n = 1; n <= 6; ++n) {
        Triangulation p = build_path(n);
        ValidityReport r = validate(p);
        CHECK(r.is_3manifold);
        CHECK(r.is_bounded);
        FacePairingGraph g = face_pairing_graph(p);
        CHECK(g.nodes == n);
        CHECK(static_cast<int>(g.arcs.size()) == n - 1);
        auto links = classify_vertex_links(p);
        for (LinkClass c : links) CHECK(c == LinkClass::Disc);
    }
}

TEST_CASE("edge reversal detected") {
    // Fold a face onto another face of the same tetrahedron so that an edge
    // closes up reversed: 0(012) -> 0(013) with 0->1, 1->0, 2->3 sends edge
    // 01 to itself reversed.
    Triangulation t(1);
    t.glue(0, 0, 0, 1, Perm4(1, 0, 3, 2));
    SkeletonData sk = compute_skeleton(t);
    bool some_invalid = false;
    for (bool v : sk.edge_valid) some_invalid = some_invalid || !v;
    CHECK(some_invalid);
    CHECK_FALSE(validate(t).is_3manifold);
}

TEST_CASE("signature: relabelling invariance and round trip") {
    std::mt19937 rng(20240811);
    std::vector<Triangulation> samples = {build_binomial(3), build_path(4), build_plug_e(),
                                          build_g11(), Triangulation(1)};
    for (const Triangulation& t : samples) {
        std::string sig = canonical_signature(t);

        Triangulation parsed = triangulation_from_signature(sig);
        CHECK(canonical_signature(parsed) == sig);

        for (int trial = 0; trial < 25; ++trial) {
            // Random relabelling: permute tetrahedra and vertices.
            int n = t.size();
            std::vector<int> tp(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) tp[static_cast<size_t>(i)] = i;
            std::shuffle(tp.begin(), tp.end(), rng);
            std::vector<Perm4> vp;
            for (int i = 0; i < n; ++i)
                vp.push_back(Perm4::from_index(std::uniform_int_distribution<int>(0, 23)(rng)));

            Triangulation r(n);
            for (int tet = 0; tet < n; ++tet) {
                for (int f = 0; f < 4; ++f) {
                    if (!t.is_glued(tet, f)) continue;
                    const FaceGluing& g = t.gluing(tet, f);
                    int nt = tp[static_cast<size_t>(tet)];
                    int nf = face_opposite(vp[static_cast<size_t>(tet)][opposite_vertex(f)]);
                    int mt = tp[static_cast<size_t>(g.tet)];
                    Perm4 nm = vp[static_cast<size_t>(g.tet)] * g.vertex_map *
                               vp[static_cast<size_t>(tet)].inverse();
                    if (!r.is_glued(nt, nf)) r.glue(nt, nf, mt, face_opposite(nm[opposite_vertex(nf)]), nm);
                }
            }
            CHECK(canonical_signature(r) == sig);
        }
    }
}

TEST_CASE("signature separates small families") {
    CHECK(canonical_signature(build_binomial(2)) != canonical_signature(build_path(2)));
    CHECK(canonical_signature(build_binomial(3)) != canonical_signature(build_binomial(2)));
}

TEST_CASE("tree extension: sizes double plus one") {
    TreeContext ctx = tree_context_for_g();
    CHECK(ctx.tri.size() == 11);
    TreeContext one = tree_extend(ctx);
    CHECK(one.tri.size() == 23);
    CHECK(one.alpha == Int(31643) * 31643);
    CHECK(validate(one.tri).is_bounded);
    TreeContext two = tree_extend(one);
    CHECK(two.tri.size() == 47);
    CHECK(validate(two.tri).is_bounded);
}

TEST_CASE("tree extension rejects fully identified faces") {
    // Fold 0(012) -> 0(013) by 0->1, 1->3, 2->0: the closure identifies all
    // four vertices, so every remaining boundary face has all its vertices
    // identified and is unusable for the tree construction.
    Triangulation t(1);
    t.glue(0, 0, 0, 1, Perm4(1, 3, 0, 2));
    SkeletonData sk = compute_skeleton(t);
    REQUIRE(sk.vertex_orbit_count == 1);
    TreeContext ctx;
    ctx.tri = t;
    ctx.face_tet = 0;
    ctx.face_idx = 2;
    ctx.arc_vertex = 0;
    ctx.alpha = 1;
    CHECK_THROWS_AS(tree_extend(ctx), PreconditionViolated);
}
