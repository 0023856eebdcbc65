#include "nsurf/signature.hpp"

#include <algorithm>
#include <sstream>

namespace nsurf {

namespace {

// Encodes the component containing `root`, relabelled so that `root`
// becomes tetrahedron 0 with vertex relabelling `sigma`, discovered
// tetrahedra are numbered in traversal order, and each discovery gluing
// becomes the identity map.  The traversal order is a function of the
// relabelled structure only, so the minimum encoding over all
// (root, sigma) choices is a complete isomorphism invariant.
std::string encode_component(const Triangulation& t, int root, const Perm4& sigma,
                             std::vector<int>* covered = nullptr) {
    std::vector<int> label(static_cast<size_t>(t.size()), -1);
    std::vector<Perm4> rho(static_cast<size_t>(t.size()));
    std::vector<int> order;
    label[static_cast<size_t>(root)] = 0;
    rho[static_cast<size_t>(root)] = sigma;
    order.push_back(root);

    std::ostringstream out;
    for (size_t k = 0; k < order.size(); ++k) {
        int tet = order[k];
        Perm4 r = rho[static_cast<size_t>(tet)];
        Perm4 rinv = r.inverse();
        for (int fp = 0; fp < 4; ++fp) {
            int f = face_opposite(rinv[opposite_vertex(fp)]);
            if (k != 0 || fp != 0) out << ',';
            if (t.is_boundary(tet, f)) {
                out << 'b';
                continue;
            }
            const FaceGluing& g = t.gluing(tet, f);
            if (label[static_cast<size_t>(g.tet)] < 0) {
                label[static_cast<size_t>(g.tet)] = static_cast<int>(order.size());
                rho[static_cast<size_t>(g.tet)] = r * g.vertex_map.inverse();
                order.push_back(g.tet);
                out << 'n';
            } else {
                Perm4 psi = rho[static_cast<size_t>(g.tet)] * g.vertex_map * rinv;
                out << 'g' << label[static_cast<size_t>(g.tet)] << '.' << psi.index();
            }
        }
    }
    if (covered) *covered = order;
    return std::to_string(order.size()) + "|" + out.str();
}

std::string minimal_component_encoding(const Triangulation& t, const std::vector<int>& comp) {
    std::string best;
    for (int root : comp) {
        for (int p = 0; p < 24; ++p) {
            std::string cand = encode_component(t, root, Perm4::from_index(p));
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

std::string canonical_signature(const Triangulation& t) {
    // Component decomposition (census input is connected, but the signature
    // is defined for any triangulation).
    std::vector<int> comp_id(static_cast<size_t>(t.size()), -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < t.size(); ++s) {
        if (comp_id[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> comp, stack = {s};
        comp_id[static_cast<size_t>(s)] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int f = 0; f < 4; ++f) {
                if (!t.is_glued(u, f)) continue;
                int v = t.gluing(u, f).tet;
                if (comp_id[static_cast<size_t>(v)] < 0) {
                    comp_id[static_cast<size_t>(v)] = static_cast<int>(comps.size());
                    stack.push_back(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    }

    std::vector<std::string> parts;
    parts.reserve(comps.size());
    for (const auto& comp : comps) parts.push_back(minimal_component_encoding(t, comp));
    std::sort(parts.begin(), parts.end());
    std::string sig = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) sig += "+" + parts[i];
    return sig;
}

Triangulation triangulation_from_signature(const std::string& sig) {
    // Split into components.
    std::vector<std::pair<int, std::vector<std::string>>> comps;
    size_t pos = 0;
    int total = 0;
    while (pos <= sig.size()) {
        size_t plus = sig.find('+', pos);
        std::string part = sig.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        size_t bar = part.find('|');
        if (bar == std::string::npos) throw SyntaxError("signature: missing size prefix");
        int n = 0;
        try {
            n = std::stoi(part.substr(0, bar));
        } catch (const std::exception&) {
            throw SyntaxError("signature: bad size prefix");
        }
        if (n < 1) throw SyntaxError("signature: bad component size");
        std::vector<std::string> tokens;
        std::istringstream ts(part.substr(bar + 1));
        std::string tok;
        while (std::getline(ts, tok, ',')) tokens.push_back(tok);
        if (static_cast<int>(tokens.size()) != 4 * n)
            throw SyntaxError("signature: expected " + std::to_string(4 * n) + " tokens");
        comps.emplace_back(n, std::move(tokens));
        total += n;
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }

    Triangulation t(total);
    int off = 0;
    for (const auto& [n, tokens] : comps) {
        int next = 1;
        for (int k = 0; k < n; ++k) {
            for (int fp = 0; fp < 4; ++fp) {
                const std::string& tok = tokens[static_cast<size_t>(4 * k + fp)];
                if (tok == "b") {
                    if (t.is_glued(off + k, fp)) throw SyntaxError("signature: boundary/gluing clash");
                    continue;
                }
                if (tok == "n") {
                    if (next >= n) throw SyntaxError("signature: too many discoveries");
                    t.glue(off + k, fp, off + next, fp, Perm4());
                    ++next;
                    continue;
                }
                if (tok.empty() || tok[0] != 'g') throw SyntaxError("signature: bad token '" + tok + "'");
                size_t dot = tok.find('.');
                if (dot == std::string::npos) throw SyntaxError("signature: bad token '" + tok + "'");
                int target = 0, pidx = 0;
                try {
                    target = std::stoi(tok.substr(1, dot - 1));
                    pidx = std::stoi(tok.substr(dot + 1));
                } catch (const std::exception&) {
                    throw SyntaxError("signature: bad token '" + tok + "'");
                }
                if (target < 0 || target >= n || pidx < 0 || pidx >= 24)
                    throw SyntaxError("signature: token out of range '" + tok + "'");
                Perm4 psi = Perm4::from_index(pidx);
                int f2 = face_opposite(psi[opposite_vertex(fp)]);
                if (t.is_glued(off + k, fp)) {
                    const FaceGluing& g = t.gluing(off + k, fp);
                    if (g.tet != off + target || g.face != f2 || !(g.vertex_map == psi))
                        throw SyntaxError("signature: inconsistent back-reference");
                } else {
                    t.glue(off + k, fp, off + target, f2, psi);
                }
            }
        }
        if (next != n) throw SyntaxError("signature: component not fully discovered");
        off += n;
    }
    return t;
}

}  // namespace nsurf
