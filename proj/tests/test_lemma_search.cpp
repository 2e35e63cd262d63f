#include <doctest.h>

#include <vector>

#include "turan/constructions.hpp"
#include "turan/lemma_search.hpp"

using namespace turan;

namespace {

// Raw enumeration of every weight assignment; the independent oracle for the
// branch-and-bound at tiny n.
long long brute_force_max(int n, int pair_cap, int triple_cap) {
    const int pairs = static_cast<int>(binom2(n));
    std::vector<std::pair<int, int>> pv;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pv.emplace_back(u, v);

    std::vector<int> w(static_cast<size_t>(pairs), 0);
    long long best = -1;
    auto weight_of = [&](int a, int b) {
        for (size_t i = 0; i < pv.size(); ++i)
            if (pv[i] == std::make_pair(std::min(a, b), std::max(a, b)))
                return w[i];
        return 0;
    };
    auto feasible = [&]() {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int z = v + 1; z < n; ++z)
                    if (weight_of(u, v) + weight_of(u, z) + weight_of(v, z) > triple_cap)
                        return false;
        return true;
    };
    while (true) {
        if (feasible()) {
            long long e = 0;
            for (int x : w) e += x;
            best = std::max(best, e);
        }
        int i = 0;
        while (i < pairs && w[static_cast<size_t>(i)] == pair_cap) w[static_cast<size_t>(i++)] = 0;
        if (i == pairs) break;
        ++w[static_cast<size_t>(i)];
    }
    return best;
}

LemmaSearchConfig config_for(int n, bool symmetry = true) {
    LemmaSearchConfig cfg;
    cfg.n = n;
    cfg.symmetry_reduction = symmetry;
    return cfg;
}

}  // namespace

TEST_CASE("brute force oracle fixes the small optima") {
    CHECK(brute_force_max(1, 4, 10) == 0);
    CHECK(brute_force_max(2, 4, 10) == 4);
    CHECK(brute_force_max(3, 4, 10) == 10);
    CHECK(brute_force_max(4, 4, 10) == 20);
}

TEST_CASE("branch and bound matches the oracle and m(n)") {
    for (int n = 1; n <= 5; ++n) {
        LemmaCertificate cert = max_feasible_edges(config_for(n));
        CHECK(cert.proven_exhaustive);
        CHECK(cert.optimum == count_m(n));
        CHECK(verify_feasible(cert.maximizer, config_for(n)));
        CHECK(cert.maximizer.total_weight() == cert.optimum);
        if (n <= 4) CHECK(cert.optimum == brute_force_max(n, 4, 10));
    }
}

TEST_CASE("symmetry reduction does not change the optimum") {
    for (int n = 2; n <= 5; ++n) {
        LemmaCertificate with = max_feasible_edges(config_for(n, true));
        LemmaCertificate without = max_feasible_edges(config_for(n, false));
        CHECK(with.optimum == without.optimum);
        CHECK(with.proven_exhaustive);
        CHECK(without.proven_exhaustive);
    }
}

TEST_CASE("non-default caps") {
    // Single triple, cap 6: best is 4+2+0 or similar summing to 6.
    LemmaSearchConfig cfg = config_for(3);
    cfg.triple_cap = 6;
    LemmaCertificate cert = max_feasible_edges(cfg);
    CHECK(cert.optimum == 6);
    CHECK(verify_feasible(cert.maximizer, cfg));

    // pair_cap 0 forces the empty multigraph.
    cfg = config_for(4);
    cfg.pair_cap = 0;
    CHECK(max_feasible_edges(cfg).optimum == 0);
}

TEST_CASE("node limit truncates honestly") {
    LemmaSearchConfig cfg = config_for(5);
    cfg.node_limit = 10;
    LemmaCertificate cert = max_feasible_edges(cfg);
    CHECK(!cert.proven_exhaustive);
    CHECK(cert.optimum <= count_m(5));
    CHECK(cert.nodes_explored <= 10);
}

TEST_CASE("verify_feasible") {
    CHECK(verify_feasible(make_M1(10), config_for(10)));
    CHECK(verify_feasible(make_M2(9), config_for(9)));
    CHECK(verify_feasible(make_M3_fourpart(11), config_for(11)));

    Multigraph over_pair(4, 5);
    over_pair.set_weight(0, 1, 5);
    CHECK(!verify_feasible(over_pair, config_for(4)));

    Multigraph over_triple(3);
    over_triple.set_weight(0, 1, 4);
    over_triple.set_weight(0, 2, 4);
    over_triple.set_weight(1, 2, 3);
    CHECK(!verify_feasible(over_triple, config_for(3)));

    CHECK_THROWS_AS(verify_feasible(make_M1(5), config_for(6)), std::invalid_argument);
}

TEST_CASE("sampler output is feasible, bounded, and reproducible") {
    FeasibleSampler sampler(12, 2025);
    FeasibleSampler replay(12, 2025);
    long long m12 = count_m(12);
    CHECK(m12 == 204);
    for (int i = 0; i < 1000; ++i) {
        Multigraph m = sampler.next();
        CHECK(verify_feasible(m, config_for(12)));
        CHECK(m.total_weight() <= m12);
        if (i < 5) CHECK(m == replay.next());
    }
}

TEST_CASE("sampler respects the exhaustive optimum at n=5") {
    FeasibleSampler sampler(5, 7);
    for (int i = 0; i < 400; ++i) CHECK(sampler.next().total_weight() <= 32);
    FeasibleSampler trivial(1, 7);
    CHECK(trivial.next().total_weight() == 0);
}

TEST_CASE("deleting a weight-4 pair keeps feasibility on n-2 vertices") {
    FeasibleSampler sampler(9, 501);
    int exercised = 0;
    for (int i = 0; i < 200; ++i) {
        Multigraph m = sampler.next();
        int px = -1, py = -1;
        for (int u = 0; u < 9 && px < 0; ++u)
            for (int v = u + 1; v < 9 && px < 0; ++v)
                if (m.weight(u, v) == 4) { px = u; py = v; }
        if (px < 0) continue;
        ++exercised;
        Multigraph sub(7);
        std::vector<int> keep;
        for (int v = 0; v < 9; ++v)
            if (v != px && v != py) keep.push_back(v);
        for (size_t i2 = 0; i2 < keep.size(); ++i2)
            for (size_t j = i2 + 1; j < keep.size(); ++j)
                sub.set_weight(static_cast<int>(i2), static_cast<int>(j),
                               m.weight(keep[i2], keep[j]));
        CHECK(verify_feasible(sub, config_for(7)));
    }
    CHECK(exercised > 0);
}

TEST_CASE("no feasible multigraph puts 6n-7 weight around a 4-pair") {
    FeasibleSampler sampler(8, 90210);
    int four_pairs_seen = 0;
    for (int i = 0; i < 300; ++i) {
        Multigraph m = sampler.next();
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (m.weight(u, v) != 4) continue;
                ++four_pairs_seen;
                CHECK(m.weighted_incidence(std::vector<int>{u, v}) < 6 * 8 - 7);
            }
    }
    CHECK(four_pairs_seen > 0);
}
