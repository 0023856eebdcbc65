#pragma once

#include "nsurf/normal.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

enum class FamilyKind { Binomial, Path, FibLST, G, E, ClosedC, TreeStep };

struct FamilySpec {
    FamilyKind kind;
    int parameter = 0;  // n for the parameterised families, step count for TreeStep
};

/// Binomial family A_n: fold i(012) -> i(013) in every tetrahedron, then
/// chain i(123) -> (i+1)(230) cyclically.  Closed 1-vertex for every n >= 1.
Triangulation build_binomial(int n);

/// Path family P_n: join consecutive tetrahedra by i(012) -> (i+1)(013).
Triangulation build_path(int n);

/// Fibonacci layered solid tori B_n = LST(F_{n+1}, F_{n+2}, F_{n+3}):
/// a one-tetrahedron fold, then one layering per extra tetrahedron, each
/// turning the boundary edge with the fewest meridian intersections into an
/// internal edge.
Triangulation build_fib_lst(int n);

/// The two boundary faces of B_n, ordered by (tet, face).
std::pair<std::pair<int, int>, std::pair<int, int>> lst_boundary_faces(int n);

/// The 11-tetrahedron bounded triangulation G (tree-lemma starting point).
Triangulation build_g11();

/// The 4-tetrahedron plug E with boundary faces 3(013) and 3(123).
Triangulation build_plug_e();

/// Closed family C_n (n >= 5): B_{n-4} and E glued along their boundary tori
/// by a fixed identification.  Closed 1-vertex for every n >= 5.
Triangulation build_closed_c(int n);

Triangulation build_family(const FamilySpec& spec);

/// State for the tree-doubling construction: a bounded triangulation with a
/// designated boundary face, a designated arc type (named by its cut-off
/// vertex), and the recorded lower bound on surfaces meeting that face in
/// arcs of that type only.
struct TreeContext {
    Triangulation tri;
    int face_tet = 0;
    int face_idx = 0;
    int arc_vertex = 0;
    Int alpha = 0;

    TreeContext() : tri(1) {}
};

/// Free tetrahedron seed: f = 0(012), arc around vertex 0, alpha = 2.
TreeContext tree_seed_free();

/// G with its designated face f0 = 0(012) and arc around vertex 0
/// (alpha_0 = 31643).
TreeContext tree_context_for_g();

/// One doubling step: joins two copies of the context's triangulation to a
/// fresh root tetrahedron along their designated faces, with both designated
/// arcs next to the same root vertex, honouring the vertex-identification
/// case analysis.  Where several legal attachments exist the lexicographically
/// smallest vertex maps are used.
TreeContext tree_extend(const TreeContext& ctx);

}  // namespace nsurf
