#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/three_graph.hpp"

namespace turan {

// Every labeled F33 copy inside the complete 3-graph on n vertices, as a
// deduplicated list of 10-edge triple-rank sets.
struct CopyCatalog {
    int n = 0;
    std::vector<std::vector<long long>> copies;  // sorted triple ranks, 10 each
};

CopyCatalog enumerate_copies(int n);

struct TuranCertificate {
    int n = 0;
    long long optimum = 0;
    ThreeGraph witness;
    bool proven_exhaustive = false;
    std::uint64_t nodes_explored = 0;
};

// Exact ex(n, F33) by minimum hitting set over the copy catalog: every copy
// must lose an edge, and the maximum F33-free graph is the complement of the
// smallest such deletion set. Branch and bound picks the unhit copy with the
// fewest branchable edges and lower-bounds by greedy disjoint-copy packing.
TuranCertificate exact_turan(int n, std::optional<std::uint64_t> node_limit = {});

// All F33-free graphs on n vertices with exactly ex(n) edges, one per
// isomorphism class, in canonical order. Desk scale: n <= 7.
std::vector<ThreeGraph> enumerate_extremal(int n);

// Canonical relabeling by exhaustive permutation (n <= 8): the lexicographic
// minimum of the edge bitset over all vertex orders.
ThreeGraph canonical_form(const ThreeGraph& g);

struct AuditResult {
    bool ok = false;
    std::string reason;
};

// Independent re-check of a certificate: the witness must be F33-free with
// e = optimum, and the optimum must meet the bipartite lower bound (or 10 at
// n = 5).
AuditResult audit_certificate(const TuranCertificate& cert);

// Greedy packing of pairwise edge-disjoint copies; a lower bound on the
// minimum hitting set size. Exposed for auditing.
long long greedy_packing_bound(const CopyCatalog& catalog);

}  // namespace turan
