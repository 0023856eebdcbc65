#pragma once

#include <string>
#include <vector>

#include "nsurf/enumerate.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

enum class CensusKind { Closed, Bounded };

const char* to_string(CensusKind k);

struct CensusQuery {
    int n = 1;
    CensusKind kind = CensusKind::Closed;
    bool one_vertex = false;  // restricts the stream to 1-vertex triangulations
    bool discs_only = false;  // restricts the statistics to vertex normal discs
};

struct CensusOptions {
    int jobs = 1;
    std::string journal;  // path of the append-only task journal ("" = none)
    int ceiling = 5;      // refuse n above this without force
    bool force = false;
    bool with_stats = true;  // false skips per-triangulation enumeration
};

/// One census member: its canonical signature plus enumeration statistics.
struct CensusRecord {
    std::string sig;
    bool one_vertex = false;
    Int sigma = 0, kappa = 0, sigma_discs = 0, kappa_discs = 0;
};

/// All valid connected 3-manifold triangulations of the given size and kind,
/// one per isomorphism class, sorted by signature.
struct CensusRun {
    std::vector<CensusRecord> records;
};

CensusRun run_census(int n, CensusKind kind, const CensusOptions& opt = {});

std::vector<std::string> census_signatures(const CensusQuery& q, const CensusOptions& opt = {});

struct CensusStats {
    CensusQuery query;
    long long count = 0;
    Int sigma_max = 0, sigma_sum = 0;
    Int kappa_max = 0, kappa_sum = 0;

    /// Exact rational average rendered to one decimal (round half up).
    static std::string render_avg(const Int& sum, long long count);
    std::string sigma_avg() const { return render_avg(sigma_sum, count); }
    std::string kappa_avg() const { return render_avg(kappa_sum, count); }
};

CensusStats aggregate_stats(const CensusQuery& q, const CensusOptions& opt = {});
CensusStats aggregate_stats(const CensusQuery& q, const CensusRun& run);

std::string stats_csv_header();
std::string stats_csv_row(const CensusStats& s);

/// Face pairing multigraph used as the unit of census work: nodes are
/// tetrahedra, entry (i,j) counts arcs, the diagonal counts loops.
struct Multigraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int i) const;
    bool connected() const;
    std::string canonical_id() const;
};

std::vector<Multigraph> enumerate_face_pairing_graphs(int n, CensusKind kind);

}  // namespace nsurf
