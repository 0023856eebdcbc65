#include "nsurf/census.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "nsurf/signature.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/surface.hpp"

namespace nsurf {

const char* to_string(CensusKind k) { return k == CensusKind::Closed ? "closed" : "bounded"; }

int Multigraph::degree(int i) const {
    int d = 2 * adj[static_cast<size_t>(i)][static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
        if (j != i) d += adj[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return d;
}

bool Multigraph::connected() const {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (v != u && adj[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0 &&
                !seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string Multigraph::canonical_id() const {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::string best;
    do {
        std::ostringstream s;
        s << n << ':';
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                s << adj[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                        [static_cast<size_t>(perm[static_cast<size_t>(j)])]
                  << (j + 1 < n || i + 1 < n ? "," : "");
        std::string cand = s.str();
        if (best.empty() || cand < best) best = std::move(cand);
    } while (std::next_permutation(perm.begin() + 1, perm.end()) ||
             std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Multigraph> enumerate_face_pairing_graphs(int n, CensusKind kind) {
    std::vector<Multigraph> out;
    std::set<std::string> seen;

    Multigraph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));

    // Fill the upper triangle row by row; each finished row pins that node's
    // degree (4 for closed, at most 4 for bounded).
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == n) {
            bool any_free = false;
            for (int k = 0; k < n; ++k)
                if (g.degree(k) < 4) any_free = true;
            if (kind == CensusKind::Bounded && !any_free) return;
            if (!g.connected()) return;
            std::string id = g.canonical_id();
            if (seen.insert(id).second) out.push_back(g);
            return;
        }
        if (j == n) {
            int d = g.degree(i);
            if (d > 4) return;
            if (kind == CensusKind::Closed && d != 4) return;
            rec(i + 1, i + 1);
            return;
        }
        int room = 4 - g.degree(i);
        if (j != i) room = std::min(room, 4 - g.degree(j));
        int max_count = (j == i) ? room / 2 : room;
        for (int c = 0; c <= max_count; ++c) {
            g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
            g.adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = c;
            rec(i, j + 1);
        }
        g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        g.adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = 0;
    };
    rec(0, 0);

    std::sort(out.begin(), out.end(),
              [](const Multigraph& a, const Multigraph& b) { return a.canonical_id() < b.canonical_id(); });
    return out;
}

namespace {

// Concrete realization of a multigraph as face slot pairs, deterministic.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> realize(const Multigraph& g) {
    std::vector<int> next_free(static_cast<size_t>(g.n), 0);
    auto take = [&](int tet) { return std::pair(tet, next_free[static_cast<size_t>(tet)]++); };
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arcs;
    for (int i = 0; i < g.n; ++i) {
        for (int l = 0; l < g.adj[static_cast<size_t>(i)][static_cast<size_t>(i)]; ++l) {
            auto a = take(i);
            auto b = take(i);
            arcs.emplace_back(a, b);
        }
        for (int j = i + 1; j < g.n; ++j)
            for (int c = 0; c < g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++c)
                arcs.emplace_back(take(i), take(j));
    }
    return arcs;
}

// Partial-assignment pruning: an edge orbit that closes up reversed can never
// recover, and a vertex link that is already closed must be a sphere.
bool partial_ok(const Triangulation& t) {
    SkeletonData sk = compute_skeleton(t);
    for (bool valid : sk.edge_valid)
        if (!valid) return false;
    for (int o = 0; o < sk.vertex_orbit_count; ++o)
        if (!sk.link_has_boundary[static_cast<size_t>(o)] &&
            sk.link_class[static_cast<size_t>(o)] != LinkClass::Sphere)
            return false;
    return true;
}

// All six bijections of one face's vertices onto another's, extended with
// opposite -> opposite, in deterministic order.
std::vector<Perm4> face_maps(int f1, int f2) {
    std::vector<Perm4> maps;
    const auto& src = face_vertices[static_cast<size_t>(f1)];
    std::array<int, 3> dst = face_vertices[static_cast<size_t>(f2)];
    std::sort(dst.begin(), dst.end());
    do {
        int img[4];
        img[opposite_vertex(f1)] = opposite_vertex(f2);
        for (int i = 0; i < 3; ++i) img[src[static_cast<size_t>(i)]] = dst[static_cast<size_t>(i)];
        maps.emplace_back(img[0], img[1], img[2], img[3]);
    } while (std::next_permutation(dst.begin(), dst.end()));
    return maps;
}

std::vector<CensusRecord> graph_records(const Multigraph& g, int n, CensusKind kind,
                                        bool with_stats) {
    auto arcs = realize(g);
    std::set<std::string> sigs;
    std::vector<CensusRecord> records;

    Triangulation t(n);
    std::function<void(size_t)> rec = [&](size_t ai) {
        if (ai == arcs.size()) {
            ValidityReport rep = validate(t);
            bool member = (kind == CensusKind::Closed) ? rep.is_closed : rep.is_bounded;
            if (!member) return;
            std::string sig = canonical_signature(t);
            if (!sigs.insert(sig).second) return;
            CensusRecord r;
            r.sig = std::move(sig);
            r.one_vertex = rep.skeleton.vertex_orbit_count == 1;
            if (with_stats) {
                VertexSurfaceSet s = enumerate_vertex_surfaces(t);
                ComplexityStats cs = complexity_stats(t, s);
                r.sigma = cs.sigma;
                r.kappa = cs.kappa;
                r.sigma_discs = cs.sigma_discs;
                r.kappa_discs = cs.kappa_discs;
            }
            records.push_back(std::move(r));
            return;
        }
        auto [a, b] = arcs[ai];
        for (const Perm4& m : face_maps(a.second, b.second)) {
            t.glue(a.first, a.second, b.first, b.second, m);
            if (partial_ok(t)) rec(ai + 1);
            t.unglue(a.first, a.second);
        }
    };
    rec(0);

    std::sort(records.begin(), records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.sig < b.sig; });
    return records;
}

struct Journal {
    std::set<std::string> done;
    std::vector<CensusRecord> records;
};

Journal read_journal(const std::string& path, const std::string& header) {
    Journal j;
    std::ifstream in(path);
    if (!in) return j;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            if (line != header)
                throw Error("journal header mismatch: expected '" + header + "', found '" + line + "'");
            first = false;
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "done") {
            std::string id;
            std::getline(ls, id);
            if (!id.empty() && id[0] == ' ') id.erase(0, 1);
            j.done.insert(id);
        } else if (tag == "tri") {
            CensusRecord r;
            std::string sigma, kappa, sd, kd;
            int ov = 0;
            ls >> r.sig >> ov >> sigma >> kappa >> sd >> kd;
            if (ls.fail()) throw Error("journal: malformed tri line '" + line + "'");
            r.one_vertex = ov != 0;
            r.sigma = Int(sigma);
            r.kappa = Int(kappa);
            r.sigma_discs = Int(sd);
            r.kappa_discs = Int(kd);
            j.records.push_back(std::move(r));
        } else {
            throw Error("journal: unknown line '" + line + "'");
        }
    }
    return j;
}

}  // namespace

CensusRun run_census(int n, CensusKind kind, const CensusOptions& opt) {
    if (n < 1) throw ParameterOutOfRange("census needs n >= 1");
    if (n > opt.ceiling && !opt.force)
        throw TooLarge("census size " + std::to_string(n) + " above the ceiling " +
                       std::to_string(opt.ceiling) + "; use the force/override option");

    std::string header = std::string("census n=") + std::to_string(n) + " kind=" + to_string(kind);
    Journal journal;
    if (!opt.journal.empty()) journal = read_journal(opt.journal, header);

    std::vector<Multigraph> graphs = enumerate_face_pairing_graphs(n, kind);
    std::vector<std::string> ids(graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) ids[i] = graphs[i].canonical_id();

    std::ofstream journal_out;
    std::mutex journal_mutex;
    if (!opt.journal.empty()) {
        bool fresh = journal.done.empty() && journal.records.empty();
        journal_out.open(opt.journal, std::ios::app);
        if (!journal_out) throw Error("cannot open journal file " + opt.journal);
        if (fresh) {
            journal_out << header << '\n';
            journal_out.flush();
        }
    }

    std::vector<std::vector<CensusRecord>> per_graph(graphs.size());
    std::vector<size_t> todo;
    for (size_t i = 0; i < graphs.size(); ++i)
        if (!journal.done.count(ids[i])) todo.push_back(i);

    std::mutex queue_mutex;
    size_t queue_pos = 0;
    auto worker = [&]() {
        for (;;) {
            size_t task;
            {
                std::lock_guard<std::mutex> lock(queue_mutex);
                if (queue_pos == todo.size()) return;
                task = todo[queue_pos++];
            }
            std::vector<CensusRecord> recs = graph_records(graphs[task], n, kind, opt.with_stats);
            if (!opt.journal.empty()) {
                std::lock_guard<std::mutex> lock(journal_mutex);
                for (const CensusRecord& r : recs)
                    journal_out << "tri " << r.sig << ' ' << (r.one_vertex ? 1 : 0) << ' ' << r.sigma
                                << ' ' << r.kappa << ' ' << r.sigma_discs << ' ' << r.kappa_discs
                                << '\n';
                journal_out << "done " << ids[task] << '\n';
                journal_out.flush();
            }
            per_graph[task] = std::move(recs);
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    CensusRun run;
    run.records = std::move(journal.records);
    for (auto& recs : per_graph)
        for (auto& r : recs) run.records.push_back(std::move(r));
    std::sort(run.records.begin(), run.records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.sig < b.sig; });
    // Isomorphic triangulations share their face pairing graph, so records
    // coming from distinct graphs are distinct; duplicates indicate journal
    // replay of a partially journalled graph.
    run.records.erase(std::unique(run.records.begin(), run.records.end(),
                                  [](const CensusRecord& a, const CensusRecord& b) {
                                      return a.sig == b.sig;
                                  }),
                      run.records.end());
    return run;
}

std::vector<std::string> census_signatures(const CensusQuery& q, const CensusOptions& opt) {
    CensusOptions o = opt;
    o.with_stats = false;
    CensusRun run = run_census(q.n, q.kind, o);
    std::vector<std::string> sigs;
    for (const CensusRecord& r : run.records)
        if (!q.one_vertex || r.one_vertex) sigs.push_back(r.sig);
    return sigs;
}

std::string CensusStats::render_avg(const Int& sum, long long count) {
    if (count == 0) return "0.0";
    Int scaled = (20 * sum + count) / (2 * count);
    Int whole = scaled / 10;
    Int frac = scaled % 10;
    return whole.str() + "." + frac.str();
}

CensusStats aggregate_stats(const CensusQuery& q, const CensusRun& run) {
    CensusStats s;
    s.query = q;
    for (const CensusRecord& r : run.records) {
        if (q.one_vertex && !r.one_vertex) continue;
        const Int& sigma = q.discs_only ? r.sigma_discs : r.sigma;
        const Int& kappa = q.discs_only ? r.kappa_discs : r.kappa;
        ++s.count;
        s.sigma_sum += sigma;
        s.kappa_sum += kappa;
        if (sigma > s.sigma_max) s.sigma_max = sigma;
        if (kappa > s.kappa_max) s.kappa_max = kappa;
    }
    return s;
}

CensusStats aggregate_stats(const CensusQuery& q, const CensusOptions& opt) {
    return aggregate_stats(q, run_census(q.n, q.kind, opt));
}

std::string stats_csv_header() {
    return "n,kind,one_vertex,discs_only,count,sigma_max,sigma_avg,kappa_max,kappa_avg";
}

std::string stats_csv_row(const CensusStats& s) {
    std::ostringstream out;
    out << s.query.n << ',' << to_string(s.query.kind) << ',' << (s.query.one_vertex ? "true" : "false")
        << ',' << (s.query.discs_only ? "true" : "false") << ',' << s.count << ',' << s.sigma_max << ','
        << s.sigma_avg() << ',' << s.kappa_max << ',' << s.kappa_avg();
    return out.str();
}

}  // namespace nsurf
