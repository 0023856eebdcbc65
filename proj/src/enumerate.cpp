#include "nsurf/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "nsurf/skeleton.hpp"
#include "nsurf/surface.hpp"

namespace nsurf {

namespace {

using boost::multiprecision::gcd;

/// Zero-set bitmask over the 7n coordinates.
struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(int nbits = 0) : w(static_cast<size_t>((nbits + 63) / 64), 0) {}

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }

    int popcount() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }

    static int and_popcount(const Bits& a, const Bits& b) {
        int c = 0;
        for (size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & b.w[i]);
        return c;
    }

    /// (a & b) subset of this?
    bool covers_intersection(const Bits& a, const Bits& b) const {
        for (size_t i = 0; i < w.size(); ++i)
            if ((a.w[i] & b.w[i]) & ~w[i]) return false;
        return true;
    }

    /// this superset of o?
    bool covers(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }

    static Bits intersect(const Bits& a, const Bits& b) {
        Bits out;
        out.w.resize(a.w.size());
        for (size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
        return out;
    }

    friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
    size_t operator()(const Bits& b) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : b.w) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

struct Ray {
    std::vector<Int> x;
    Bits zeros;
    std::vector<uint8_t> qmask;  // per tetrahedron: bit m set iff quad m in support
};

bool quad_compatible(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        uint8_t m = a[i] | b[i];
        if (m & (m - 1)) return false;  // more than one quad type in a tetrahedron
    }
    return true;
}

void normalize_gcd(std::vector<Int>& x) {
    Int g = 0;
    for (const Int& v : x) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (Int& v : x) v /= g;
}

Ray make_ray(std::vector<Int> x, int n) {
    normalize_gcd(x);
    Ray r;
    r.zeros = Bits(static_cast<int>(x.size()));
    r.qmask.assign(static_cast<size_t>(n), 0);
    for (int c = 0; c < static_cast<int>(x.size()); ++c) {
        if (x[static_cast<size_t>(c)] == 0) {
            r.zeros.set(c);
        } else if (c % 7 >= 4) {
            r.qmask[static_cast<size_t>(c / 7)] |= static_cast<uint8_t>(1 << (c % 7 - 4));
        }
    }
    r.x = std::move(x);
    return r;
}

/// Lower bound on the dimension of the current cone: the rank of the ray
/// span, computed modulo a prime (modular rank never exceeds the true rank,
/// so the adjacency precheck built on it stays sound).
class ModRank {
    static constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

    static uint64_t mul(uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
    }
    static uint64_t pow_mod(uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

public:
    static int ray_span_rank(const std::vector<Ray>& rays, int cols) {
        std::vector<std::pair<int, std::vector<uint64_t>>> basis;  // (pivot col, row with pivot 1)
        int stale = 0;
        for (const Ray& r : rays) {
            if (static_cast<int>(basis.size()) == cols) break;
            if (stale > 256) break;  // rank has almost surely saturated
            std::vector<uint64_t> row(static_cast<size_t>(cols));
            for (int c = 0; c < cols; ++c) {
                Int m = r.x[static_cast<size_t>(c)] % kP;
                row[static_cast<size_t>(c)] = m.convert_to<uint64_t>();
            }
            for (const auto& [pc, pr] : basis) {
                uint64_t f = row[static_cast<size_t>(pc)];
                if (f == 0) continue;
                for (int c = 0; c < cols; ++c) {
                    uint64_t sub = mul(f, pr[static_cast<size_t>(c)]);
                    row[static_cast<size_t>(c)] =
                        (row[static_cast<size_t>(c)] + kP - sub) % kP;
                }
            }
            int pivot = -1;
            for (int c = 0; c < cols; ++c)
                if (row[static_cast<size_t>(c)] != 0) {
                    pivot = c;
                    break;
                }
            if (pivot < 0) {
                ++stale;
                continue;
            }
            stale = 0;
            uint64_t inv = pow_mod(row[static_cast<size_t>(pivot)], kP - 2);
            for (int c = 0; c < cols; ++c) row[static_cast<size_t>(c)] = mul(row[static_cast<size_t>(c)], inv);
            basis.emplace_back(pivot, std::move(row));
        }
        return static_cast<int>(basis.size());
    }
};

/// Reorders matching rows so that faces along a spanning tree of the face
/// pairing graph come first; this tends to keep intermediate ray counts
/// small.  Any order is correct.
std::vector<int> spanning_tree_row_order(const Triangulation& t, const MatchingSystem& m) {
    // Canonical side keys of internal faces in tree-discovery order.
    std::vector<std::pair<int, int>> face_order;
    std::vector<bool> face_taken(static_cast<size_t>(4 * t.size()), false);
    std::vector<bool> visited(static_cast<size_t>(t.size()), false);
    std::vector<int> queue = {0};
    visited[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int tet = queue[qi];
        for (int f = 0; f < 4; ++f) {
            if (!t.is_glued(tet, f)) continue;
            const FaceGluing& g = t.gluing(tet, f);
            if (visited[static_cast<size_t>(g.tet)]) continue;
            visited[static_cast<size_t>(g.tet)] = true;
            queue.push_back(g.tet);
            auto key = std::min(std::pair(tet, f), std::pair(g.tet, g.face));
            face_order.push_back(key);
            face_taken[static_cast<size_t>(4 * key.first + key.second)] = true;
        }
    }
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f)
            if (t.is_glued(tet, f) && !face_taken[static_cast<size_t>(4 * tet + f)]) {
                const FaceGluing& g = t.gluing(tet, f);
                if (std::pair(tet, f) < std::pair(g.tet, g.face)) face_order.emplace_back(tet, f);
            }

    std::unordered_map<int, int> face_rank;
    for (size_t i = 0; i < face_order.size(); ++i)
        face_rank[4 * face_order[i].first + face_order[i].second] = static_cast<int>(i);

    std::vector<int> order(m.rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ia = m.info[static_cast<size_t>(a)];
        const auto& ib = m.info[static_cast<size_t>(b)];
        int ra = face_rank.at(4 * ia.tet + ia.face);
        int rb = face_rank.at(4 * ib.tet + ib.face);
        if (ra != rb) return ra < rb;
        return ia.arc_vertex < ib.arc_vertex;
    });
    return order;
}

void check_enumeration_invariants(const Triangulation& t, const MatchingSystem& m,
                                  const std::vector<NormalVector>& surfaces) {
    // sigma <= 64^n  (each vertex surface is determined by its zero set, and
    // only 64 zero-set patterns per tetrahedron respect the quad constraints).
    Int bound = 1;
    for (int i = 0; i < t.size(); ++i) bound *= 64;
    if (Int(surfaces.size()) > bound)
        throw Error("enumeration invariant violated: sigma exceeds 64^n");

    std::vector<std::vector<uint64_t>> zerosets;
    zerosets.reserve(surfaces.size());
    for (const NormalVector& s : surfaces) {
        Int g = 0;
        Bits z(static_cast<int>(s.coords.size()));
        bool nonzero = false;
        for (size_t c = 0; c < s.coords.size(); ++c) {
            if (s.coords[c] < 0) throw Error("enumeration invariant violated: negative coordinate");
            if (s.coords[c] == 0)
                z.set(static_cast<int>(c));
            else
                nonzero = true;
            g = gcd(g, s.coords[c]);
        }
        if (!nonzero) throw Error("enumeration invariant violated: zero vector reported");
        if (g != 1) throw Error("enumeration invariant violated: coordinates not primitive");
        if (!satisfies_quad_constraints(s))
            throw Error("enumeration invariant violated: quad constraints");
        if (!in_matching_kernel(m, s))
            throw Error("enumeration invariant violated: matching equations");
        zerosets.push_back(z.w);
    }
    std::sort(zerosets.begin(), zerosets.end());
    if (std::adjacent_find(zerosets.begin(), zerosets.end()) != zerosets.end())
        throw Error("enumeration invariant violated: duplicate zero sets");
}

}  // namespace

Int VertexSurfaceSet::max_coordinate() const {
    Int k = 0;
    for (const NormalVector& s : surfaces)
        for (const Int& c : s.coords)
            if (c > k) k = c;
    return k;
}

VertexSurfaceSet enumerate_vertex_surfaces(const Triangulation& t) {
    if (!validate(t).is_3manifold)
        throw InvalidTriangulation("enumeration requires a valid connected 3-manifold triangulation");

    const int n = t.size();
    const int cols = 7 * n;
    MatchingSystem m = matching_matrix(t);
    std::vector<int> order = spanning_tree_row_order(t, m);

    // Start from the extremal rays of the non-negative orthant.
    std::vector<Ray> rays;
    rays.reserve(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        std::vector<Int> x(static_cast<size_t>(cols), 0);
        x[static_cast<size_t>(c)] = 1;
        rays.push_back(make_ray(std::move(x), n));
    }

    for (int ri : order) {
        const std::vector<int8_t>& row = m.rows[static_cast<size_t>(ri)];
        std::vector<std::pair<int, int8_t>> nz;
        for (int c = 0; c < cols; ++c)
            if (row[static_cast<size_t>(c)] != 0) nz.emplace_back(c, row[static_cast<size_t>(c)]);

        std::vector<int> pos, neg;
        std::vector<int> sign(rays.size(), 0);
        std::vector<Int> dot(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            Int d = 0;
            for (const auto& [c, s] : nz) {
                const Int& v = rays[i].x[static_cast<size_t>(c)];
                if (s > 0)
                    d += v;
                else
                    d -= v;
            }
            dot[i] = std::move(d);
            if (dot[i] > 0) {
                sign[i] = 1;
                pos.push_back(static_cast<int>(i));
            } else if (dot[i] < 0) {
                sign[i] = -1;
                neg.push_back(static_cast<int>(i));
            }
        }
        if (pos.empty() && neg.empty()) continue;  // row already satisfied everywhere

        // Adjacent rays share at least dim-2 zero coordinates; a lower bound
        // on the cone dimension keeps that precheck sound.
        const int dim = ModRank::ray_span_rank(rays, cols);

        // Combine adjacent (positive, negative) pairs.
        std::vector<Ray> generated;
        std::unordered_map<Bits, size_t, BitsHash> seen;
        for (int ui : pos) {
            const Ray& u = rays[static_cast<size_t>(ui)];
            for (int vi : neg) {
                const Ray& v = rays[static_cast<size_t>(vi)];
                if (!quad_compatible(u.qmask, v.qmask)) continue;
                if (Bits::and_popcount(u.zeros, v.zeros) < dim - 2) continue;
                // Combinatorial adjacency: no third ray's zero set may
                // contain the common zero set.
                bool adjacent = true;
                for (size_t wi = 0; wi < rays.size(); ++wi) {
                    if (wi == static_cast<size_t>(ui) || wi == static_cast<size_t>(vi)) continue;
                    if (rays[wi].zeros.covers_intersection(u.zeros, v.zeros)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;

                std::vector<Int> x(static_cast<size_t>(cols));
                const Int& du = dot[static_cast<size_t>(ui)];
                Int dv = -dot[static_cast<size_t>(vi)];
                for (int c = 0; c < cols; ++c)
                    x[static_cast<size_t>(c)] = du * v.x[static_cast<size_t>(c)] +
                                                dv * u.x[static_cast<size_t>(c)];
                Ray w = make_ray(std::move(x), n);
                assert(w.zeros == Bits::intersect(u.zeros, v.zeros));
                auto [it, fresh] = seen.emplace(w.zeros, generated.size());
                if (fresh) generated.push_back(std::move(w));
            }
        }

        // A generated ray dominated in zeros by another generated ray is not
        // extremal in the new cone (its witness was pruned earlier as
        // quad-violating); drop it to keep the maintained set exact.
        std::vector<bool> drop(generated.size(), false);
        for (size_t a = 0; a < generated.size(); ++a) {
            for (size_t b = 0; b < generated.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (generated[b].zeros.covers(generated[a].zeros) &&
                    !(generated[b].zeros == generated[a].zeros)) {
                    drop[a] = true;
                    break;
                }
            }
        }

        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (sign[i] == 0) next.push_back(std::move(rays[i]));
        for (size_t a = 0; a < generated.size(); ++a)
            if (!drop[a]) next.push_back(std::move(generated[a]));

        rays = std::move(next);
        if (rays.empty()) break;
    }

    VertexSurfaceSet out;
    out.surfaces.reserve(rays.size());
    for (Ray& r : rays) {
        NormalVector v;
        v.coords = std::move(r.x);
        out.surfaces.push_back(std::move(v));
    }
    std::sort(out.surfaces.begin(), out.surfaces.end(),
              [](const NormalVector& a, const NormalVector& b) { return a.coords < b.coords; });

    check_enumeration_invariants(t, m, out.surfaces);
    return out;
}

namespace {

/// Solves the matching system restricted to a support set for a
/// one-dimensional strictly-positive kernel; returns the primitive integer
/// vector or empty when the support carries no extremal ray.
std::vector<Int> support_kernel(const MatchingSystem& m, const std::vector<int>& support) {
    using boost::multiprecision::cpp_rational;
    const int k = static_cast<int>(support.size());

    std::vector<std::vector<cpp_rational>> a;
    for (const auto& row : m.rows) {
        std::vector<cpp_rational> r(static_cast<size_t>(k));
        bool any = false;
        for (int j = 0; j < k; ++j) {
            r[static_cast<size_t>(j)] = row[static_cast<size_t>(support[static_cast<size_t>(j)])];
            if (row[static_cast<size_t>(support[static_cast<size_t>(j)])] != 0) any = true;
        }
        if (any) a.push_back(std::move(r));
    }

    // Gauss-Jordan.
    std::vector<int> pivot_col;
    size_t prow = 0;
    for (int c = 0; c < k && prow < a.size(); ++c) {
        size_t sel = prow;
        while (sel < a.size() && a[sel][static_cast<size_t>(c)] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[prow], a[sel]);
        cpp_rational p = a[prow][static_cast<size_t>(c)];
        for (int j = 0; j < k; ++j) a[prow][static_cast<size_t>(j)] /= p;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == prow || a[i][static_cast<size_t>(c)] == 0) continue;
            cpp_rational f = a[i][static_cast<size_t>(c)];
            for (int j = 0; j < k; ++j)
                a[i][static_cast<size_t>(j)] -= f * a[prow][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++prow;
    }
    int rank = static_cast<int>(pivot_col.size());
    if (k - rank != 1) return {};

    std::vector<bool> is_pivot(static_cast<size_t>(k), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    int free_col = -1;
    for (int c = 0; c < k; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_col = c;

    std::vector<cpp_rational> x(static_cast<size_t>(k), 0);
    x[static_cast<size_t>(free_col)] = 1;
    for (int i = 0; i < rank; ++i)
        x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
            -a[static_cast<size_t>(i)][static_cast<size_t>(free_col)];

    // Scale to a primitive integer vector.
    Int lcm_den = 1;
    for (const auto& v : x)
        lcm_den = lcm_den / gcd(lcm_den, denominator(v)) * denominator(v);
    std::vector<Int> xi(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
        xi[static_cast<size_t>(j)] =
            numerator(x[static_cast<size_t>(j)]) * (lcm_den / denominator(x[static_cast<size_t>(j)]));

    bool all_pos = true, all_neg = true;
    for (const Int& v : xi) {
        if (v <= 0) all_pos = false;
        if (v >= 0) all_neg = false;
    }
    if (!all_pos && !all_neg) return {};
    if (all_neg)
        for (Int& v : xi) v = -v;
    normalize_gcd(xi);
    return xi;
}

}  // namespace

VertexSurfaceSet brute_force_vertex_surfaces(const Triangulation& t) {
    const int n = t.size();
    if (7 * n > 28) throw TooLarge("brute-force oracle is limited to 7n <= 28 coordinates");
    if (!validate(t).is_3manifold)
        throw InvalidTriangulation("enumeration requires a valid connected 3-manifold triangulation");

    MatchingSystem m = matching_matrix(t);

    // Rows grouped by the largest tetrahedron their support touches, for
    // early pruning during the per-tetrahedron pattern recursion.
    std::vector<std::vector<int>> rows_by_max_tet(static_cast<size_t>(n));
    for (size_t r = 0; r < m.rows.size(); ++r) {
        int mt = 0;
        for (int c = 0; c < m.cols; ++c)
            if (m.rows[r][static_cast<size_t>(c)] != 0) mt = std::max(mt, c / 7);
        rows_by_max_tet[static_cast<size_t>(mt)].push_back(static_cast<int>(r));
    }

    std::vector<bool> in_support(static_cast<size_t>(m.cols), false);
    std::vector<NormalVector> found;

    // A row restricted to the support must carry both signs (or vanish) to
    // admit a strictly positive kernel vector.
    auto row_balanced = [&](int r) {
        bool has_pos = false, has_neg = false;
        for (int c = 0; c < m.cols; ++c) {
            int8_t e = m.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (e == 0 || !in_support[static_cast<size_t>(c)]) continue;
            if (e > 0) has_pos = true;
            if (e < 0) has_neg = true;
        }
        return has_pos == has_neg;
    };

    auto leaf = [&]() {
        std::vector<int> support;
        for (int c = 0; c < m.cols; ++c)
            if (in_support[static_cast<size_t>(c)]) support.push_back(c);
        if (support.empty()) return;
        std::vector<Int> x = support_kernel(m, support);
        if (x.empty()) return;
        NormalVector v(n);
        for (size_t j = 0; j < support.size(); ++j)
            v.coords[static_cast<size_t>(support[j])] = std::move(x[j]);
        found.push_back(std::move(v));
    };

    // 64 admissible patterns per tetrahedron: any subset of the four
    // triangle types, at most one quad type.
    auto rec = [&](auto&& self, int tet) -> void {
        if (tet == n) {
            leaf();
            return;
        }
        for (int tri_mask = 0; tri_mask < 16; ++tri_mask) {
            for (int q = -1; q < 3; ++q) {
                for (int v = 0; v < 4; ++v)
                    in_support[static_cast<size_t>(tri_coord(tet, v))] = (tri_mask >> v) & 1;
                for (int mq = 0; mq < 3; ++mq)
                    in_support[static_cast<size_t>(quad_coord(tet, mq))] = (mq == q);
                bool ok = true;
                for (int r : rows_by_max_tet[static_cast<size_t>(tet)])
                    if (!row_balanced(r)) {
                        ok = false;
                        break;
                    }
                if (ok) self(self, tet + 1);
            }
        }
        for (int k = 0; k < 7; ++k) in_support[static_cast<size_t>(7 * tet + k)] = false;
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end(),
              [](const NormalVector& a, const NormalVector& b) { return a.coords < b.coords; });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    VertexSurfaceSet out;
    out.surfaces = std::move(found);
    check_enumeration_invariants(t, m, out.surfaces);
    return out;
}

ComplexityStats complexity_stats(const Triangulation& t) {
    return complexity_stats(t, enumerate_vertex_surfaces(t));
}

ComplexityStats complexity_stats(const Triangulation& t, const VertexSurfaceSet& s) {
    ComplexityStats cs;
    cs.sigma = s.count();
    cs.kappa = s.max_coordinate();
    for (const NormalVector& v : s.surfaces) {
        TopologyClass tc = classify_surface(reconstruct_surface(t, v));
        if (tc.kind != SurfaceKind::Disc) continue;
        ++cs.sigma_discs;
        for (const Int& c : v.coords)
            if (c > cs.kappa_discs) cs.kappa_discs = c;
    }
    if (cs.sigma >= 1 && cs.kappa < 1)
        throw Error("complexity stats invariant violated: sigma >= 1 but kappa < 1");
    return cs;
}

Int count_with_face_pattern(const Triangulation& t, int tet, int face, int arc_vertex) {
    return count_with_face_pattern(t, enumerate_vertex_surfaces(t), tet, face, arc_vertex);
}

Int count_with_face_pattern(const Triangulation& t, const VertexSurfaceSet& s, int tet, int face,
                            int arc_vertex) {
    if (tet < 0 || tet >= t.size() || face < 0 || face > 3 || !t.is_boundary(tet, face))
        throw NotABoundaryFace("face " + std::to_string(tet) + "(" + std::to_string(face) +
                               ") is not a boundary face");
    int pos = -1;
    for (int i = 0; i < 3; ++i)
        if (face_vertices[static_cast<size_t>(face)][static_cast<size_t>(i)] == arc_vertex) pos = i;
    if (pos < 0)
        throw ParameterOutOfRange("arc vertex " + std::to_string(arc_vertex) +
                                  " does not lie on the face");
    Int count = 0;
    for (const NormalVector& v : s.surfaces) {
        auto p = boundary_pattern(t, v, tet, face);
        bool match = p[static_cast<size_t>(pos)] > 0;
        for (int i = 0; i < 3 && match; ++i)
            if (i != pos && p[static_cast<size_t>(i)] != 0) match = false;
        if (match) ++count;
    }
    return count;
}

std::string format_surface_list(const Triangulation& t, const std::vector<NormalVector>& surfaces) {
    std::ostringstream out;
    std::istringstream table(format_gluing_table(t));
    std::string line;
    while (std::getline(table, line)) out << "#tri " << line << '\n';
    Int kappa = 0;
    for (const NormalVector& s : surfaces)
        for (const Int& c : s.coords)
            if (c > kappa) kappa = c;
    out << "n=" << t.size() << " sigma=" << surfaces.size() << " kappa=" << kappa << '\n';
    for (const NormalVector& s : surfaces) out << format_normal_vector(s) << '\n';
    return out.str();
}

SurfaceList parse_surface_list(std::istream& in) {
    std::string line;
    std::string table;
    std::string header;
    std::vector<NormalVector> surfaces;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.rfind("#tri ", 0) == 0) {
            table += line.substr(5) + "\n";
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line.rfind("n=", 0) != 0)
                throw SyntaxError("surface list: expected 'n=... sigma=... kappa=...' header");
            header = line;
            have_header = true;
            continue;
        }
        surfaces.push_back(parse_normal_vector(line));
    }
    if (table.empty()) throw SyntaxError("surface list: missing #tri triangulation echo lines");
    if (!have_header) throw SyntaxError("surface list: missing header line");
    SurfaceList out{parse_gluing_table(table), std::move(surfaces)};
    for (const NormalVector& s : out.surfaces)
        if (s.tets() != out.tri.size())
            throw DimensionMismatch("surface list: vector size does not match triangulation");
    return out;
}

}  // namespace nsurf
