#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/combinatorics.hpp"
#include "turan/rational.hpp"

namespace turan {

// An unordered triple in canonical ascending order.
struct Triple {
    int u = 0, v = 0, w = 0;
    auto operator<=>(const Triple&) const = default;
};

Triple make_triple(int a, int b, int c);  // sorts; throws if not distinct

// Simple graph on vertices 0..n-1 backed by a colex-ranked pair bitset.
// Used for vertex links G(a) = {xy : axy in G} and their restrictions.
class PairGraph {
  public:
    explicit PairGraph(int n);
    static PairGraph from_pairs(int n, std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    long long pair_count() const { return static_cast<long long>(bits_.count()); }
    bool has_pair(int u, int v) const;
    void add_pair(int u, int v);

    // Pairs in ascending lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;

    // Keeps pairs with both endpoints in X, relabeled order-preservingly
    // to 0..|X|-1.
    PairGraph restricted(std::span<const int> x) const;

    const Bits& bits() const { return bits_; }

    friend PairGraph operator&(const PairGraph& a, const PairGraph& b);
    friend bool operator==(const PairGraph& a, const PairGraph& b) = default;

  private:
    int n_;
    Bits bits_;  // one bit per colex pair rank
};

// Lexicographically smallest triangle {u<v<w} of P, if any.
std::optional<Triple> find_triangle(const PairGraph& p);

// Immutable 3-uniform hypergraph on vertices 0..n-1. Edges live in a dense
// bitset indexed by colex triple rank, so membership and intersection are
// bit-parallel.
class ThreeGraph {
  public:
    explicit ThreeGraph(int n);
    static ThreeGraph from_triples(int n, std::span<const Triple> triples);
    static ThreeGraph from_edge_bits(int n, Bits bits);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }

    bool has_edge(int u, int v, int w) const;  // any order, must be distinct & in range

    // Edges in ascending lexicographic order.
    std::vector<Triple> edges() const;

    // e(G) / C(n,3) as an exact rational; n >= 3 required.
    Rational density() const;

    // Induced subgraph on V minus S, relabeled order-preservingly.
    ThreeGraph delete_vertices(std::span<const int> s) const;

    // Number of edges meeting S.
    long long incident_count(std::span<const int> s) const;

    // Pairs xy with axy an edge; result lives on the same vertex set.
    PairGraph vertex_link(int a) const;

    const Bits& edge_bits() const { return bits_; }

    friend bool operator==(const ThreeGraph& a, const ThreeGraph& b) = default;

  private:
    int n_ = 0;
    Bits bits_;  // one bit per colex triple rank
    long long edge_count_ = 0;
};

// Edge-list text format: first line "n m", then m lines "u v w" with
// 0-indexed ascending vertices, LF line endings, ASCII decimal.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string to_edge_list_text(const ThreeGraph& g);
ThreeGraph parse_edge_list_text(std::string_view text);

}  // namespace turan
