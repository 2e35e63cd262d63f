#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "turan/multigraph.hpp"

namespace turan {

struct LemmaSearchConfig {
    int n = 0;
    int pair_cap = 4;
    int triple_cap = 10;
    bool symmetry_reduction = true;
    std::optional<std::uint64_t> node_limit;
};

struct LemmaCertificate {
    long long optimum = 0;
    Multigraph maximizer;
    std::uint64_t nodes_explored = 0;
    bool proven_exhaustive = false;
};

// Exact maximum of e(M) over multigraphs with every pair weight <= pair_cap
// and every triple weight sum <= triple_cap, by branch-and-bound. Weights are
// assigned pair by pair in colex order (so vertices 0..k-1 form a fully
// assigned block before vertex k starts), values descending from the largest
// weight the already-assigned triples allow. When symmetry reduction is on,
// a completed block must be its own lex-max relabeling or the branch is cut.
// If node_limit stops the search early the certificate reports the best
// incumbent with proven_exhaustive = false.
LemmaCertificate max_feasible_edges(const LemmaSearchConfig& cfg);

// Straightforward re-check of both caps; independent of the search.
bool verify_feasible(const Multigraph& m, const LemmaSearchConfig& cfg);

// Deterministic stream of feasible multigraphs: pairs are visited in a
// seeded random order and each weight is drawn uniformly from the range the
// triple cap still allows. Every sample passes verify_feasible.
class FeasibleSampler {
  public:
    FeasibleSampler(int n, std::uint64_t seed, int pair_cap = 4, int triple_cap = 10);
    Multigraph next();

  private:
    int n_;
    int pair_cap_;
    int triple_cap_;
    std::mt19937_64 rng_;
};

}  // namespace turan
