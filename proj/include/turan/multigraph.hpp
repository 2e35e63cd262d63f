#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/three_graph.hpp"

namespace turan {

// Edge-weighted graph with small integer multiplicities, stored densely by
// colex pair rank. cap bounds every multiplicity (default 4, the |S|=4 case).
class Multigraph {
  public:
    explicit Multigraph(int n, int cap = 4);

    int vertex_count() const { return n_; }
    int cap() const { return cap_; }

    int weight(int u, int v) const;
    void set_weight(int u, int v, int w);

    // e(M): the sum of all pair multiplicities.
    long long total_weight() const;

    // i(S): the sum of w(xy) over pairs meeting S. For S = {x} this is the
    // weighted degree d(x).
    long long weighted_incidence(std::span<const int> s) const;

    struct TripleSum {
        int sum = 0;
        Triple triple;
    };
    // Maximum of w(xy)+w(xz)+w(yz) over all triples, with the first achieving
    // triple in colex order; n >= 3 required.
    TripleSum max_triple_sum() const;

    // Exhaustive backtracking isomorphism test with weighted-degree pruning.
    // Intended for small n (verification scale).
    bool is_isomorphic_to(const Multigraph& other) const;

    std::span<const int> weights() const { return weights_; }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

  private:
    int n_;
    int cap_;
    std::vector<int> weights_;  // colex pair rank -> multiplicity
};

// Multigraph text format: first line "n", then one line "u v w" per pair
// with nonzero weight w, u < v, ascending lexicographic order.
std::string to_multigraph_text(const Multigraph& m);
Multigraph parse_multigraph_text(std::string_view text, int cap = 4);

// Link multigraph of S where each pair remembers which apexes contribute it:
// colors(xy) = {a in S : axy is an edge}, multiplicity = |colors(xy)|.
// Vertices are V minus S relabeled order-preservingly; apexes keep their
// original labels.
class ColoredMultigraph {
  public:
    ColoredMultigraph(int n, std::vector<int> apexes);

    int vertex_count() const { return n_; }
    const std::vector<int>& apexes() const { return apexes_; }

    int multiplicity(int u, int v) const;
    std::uint8_t color_mask(int u, int v) const;
    void add_color(int u, int v, int apex_index);

    // Apex labels coloring the pair, ascending.
    std::vector<int> colors(int u, int v) const;

    long long total_multiplicity() const;

    Multigraph to_multigraph() const;

  private:
    int n_;
    std::vector<int> apexes_;
    std::vector<std::uint8_t> masks_;  // colex pair rank -> apex index bitmask
};

ColoredMultigraph build_link(const ThreeGraph& g, std::span<const int> s);

struct ColorTriangle {
    Triple triangle;
    std::vector<int> colors;  // k apex labels common to all three pairs
};

// Triangle whose three pairs share at least k common colors; the reported
// color set is the k lexicographically smallest shared apexes.
std::optional<ColorTriangle> find_common_color_triangle(const ColoredMultigraph& c, int k);

// Simple graph of pairs with multiplicity >= threshold.
PairGraph high_multiplicity_graph(const ColoredMultigraph& c, int threshold);

// Fixed-schema JSON for colored multigraphs, pairs in ascending lexicographic
// order: {"n":..,"apexes":[..],"pairs":[{"u":..,"v":..,"colors":[..]},..]}
std::string to_link_json_text(const ColoredMultigraph& c);

// Largest clique size of a small simple graph (exhaustive; desk scale only).
int clique_number(const PairGraph& p);

}  // namespace turan
