#pragma once

#include <array>
#include <optional>
#include <vector>

#include "turan/three_graph.hpp"

namespace turan {

// A small forbidden configuration, optionally with interchangeable vertex
// classes for symmetry breaking during the search.
struct Pattern {
    ThreeGraph graph;
    std::vector<std::vector<int>> orbits;  // each class is a set of mutually interchangeable vertices

    static Pattern f33();
    static Pattern single_edge();
    static Pattern complete(int t);
};

// Injective map from pattern vertices to host vertices; image[i] is the host
// vertex for pattern vertex i. Containment is not-necessarily-induced: every
// pattern edge maps onto a host edge.
struct Witness {
    std::vector<int> image;
};

struct SearchOptions {
    // Deterministic mode returns the lexicographically smallest witness under
    // the pattern's vertex order; default mode may return any witness.
    bool deterministic = false;
    int threads = 1;
};

// True iff every pattern edge maps to a host edge under w (and w is a valid
// injection). Deliberately re-checks from scratch; used to audit witnesses.
bool witness_valid(const ThreeGraph& host, const Pattern& p, const Witness& w);

// Specialized F_{3,3} containment: for each edge abc, intersect the three
// vertex links into a common pair graph and look for a triangle xyz in it.
std::optional<Witness> contains_F33(const ThreeGraph& g, const SearchOptions& opts = {});

// Generic backtracking containment with degree pruning and orbit symmetry
// breaking.
std::optional<Witness> contains_pattern(const ThreeGraph& g, const Pattern& p,
                                        const SearchOptions& opts = {});

// A 4-set spanning K3_4 (all four triples present), if one is found.
// Whenever d(G) > 3/4 such a set exists and is returned.
std::optional<std::array<int, 4>> find_dense_four_set(const ThreeGraph& g);

// Witness {a,b,c} disjoint from {x,y} such that all six triples with two
// vertices from abc and one from {x,y} are edges.
std::optional<std::array<int, 3>> is_t_connected(const ThreeGraph& g, int x, int y);

struct TTriple {
    Triple edge;
    // witnesses[0] for pair (u,v), [1] for (u,w), [2] for (v,w)
    std::array<std::array<int, 3>, 3> witnesses;
};

// An edge all three of whose pairs are t-connected, with the three witness
// sets.
std::optional<TTriple> find_t_triple(const ThreeGraph& g);

}  // namespace turan
