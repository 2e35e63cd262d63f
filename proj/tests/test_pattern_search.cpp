#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "turan/constructions.hpp"
#include "turan/pattern_search.hpp"

using namespace turan;

TEST_CASE("contains_F33 on the canonical hosts") {
    CHECK(!contains_F33(make_bipartite_B(20)).has_value());
    CHECK(!contains_F33(make_complete(5)).has_value());
    CHECK(!contains_F33(make_bipartite_B(6)).has_value());

    // Deleting any single edge from the complete 6-graph leaves a copy.
    ThreeGraph k6 = make_complete(6);
    for (const Triple& t : k6.edges()) {
        Bits bits = k6.edge_bits();
        bits.reset(static_cast<size_t>(triple_rank(t.u, t.v, t.w)));
        ThreeGraph g = ThreeGraph::from_edge_bits(6, bits);
        auto w = contains_F33(g);
        REQUIRE(w.has_value());
        CHECK(testutil::check_f33_witness(g, w->image));
    }
}

TEST_CASE("contains_F33 finds itself in F33") {
    ThreeGraph f = make_F33();
    auto w = contains_F33(f);
    REQUIRE(w.has_value());
    CHECK(w->image == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("generic pattern containment") {
    SUBCASE("single edge pattern iff any edge") {
        Pattern edge = Pattern::single_edge();
        CHECK(contains_pattern(ThreeGraph(5), edge) == std::nullopt);
        CHECK(contains_pattern(make_complete(4), edge).has_value());
    }
    SUBCASE("B(7) carries a K3_4") {
        auto w = contains_pattern(make_bipartite_B(7), Pattern::complete(4));
        REQUIRE(w.has_value());
        CHECK(witness_valid(make_bipartite_B(7), Pattern::complete(4), *w));
    }
    SUBCASE("B(6) has no F33") {
        CHECK(!contains_pattern(make_bipartite_B(6), Pattern::f33()).has_value());
    }
    SUBCASE("pattern larger than host") {
        CHECK(!contains_pattern(make_complete(5), Pattern::f33()).has_value());
    }
}

TEST_CASE("specialized and generic F33 searches agree with the brute oracle") {
    std::mt19937_64 rng(123456);
    Pattern f33 = Pattern::f33();
    int with_copy = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);  // 6..10
        ThreeGraph g = testutil::random_three_graph(n, 5 + static_cast<int>(rng() % 4), 10, rng);
        auto fast = contains_F33(g);
        auto generic = contains_pattern(g, f33);
        CHECK(fast.has_value() == generic.has_value());
        if (fast) {
            ++with_copy;
            CHECK(testutil::check_f33_witness(g, fast->image));
            CHECK(witness_valid(g, f33, *generic));
        }
        if (n <= 8) CHECK(fast.has_value() == testutil::brute_force_contains_f33(g));
    }
    CHECK(with_copy > 0);  // the sample exercises both outcomes
}

TEST_CASE("deterministic mode returns the lexicographically smallest witness") {
    std::mt19937_64 rng(31337);
    SearchOptions det;
    det.deterministic = true;
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        ThreeGraph g = testutil::random_three_graph(n, 7, 10, rng);
        auto expect = testutil::brute_force_min_f33_witness(g);
        auto fast = contains_F33(g, det);
        auto generic = contains_pattern(g, Pattern::f33(), det);
        CHECK(fast.has_value() == expect.has_value());
        if (expect) {
            CHECK(fast->image == *expect);
            CHECK(generic->image == *expect);
            ++compared;
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("parallel scan agrees with sequential") {
    std::mt19937_64 rng(5150);
    SearchOptions par;
    par.threads = 4;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 8 + static_cast<int>(rng() % 5);
        ThreeGraph g = testutil::random_three_graph(n, 3, 5, rng);
        auto seq = contains_F33(g);
        auto pll = contains_F33(g, par);
        CHECK(seq.has_value() == pll.has_value());
        if (seq) CHECK(seq->image == pll->image);
    }
}

TEST_CASE("freeness is monotone under edge deletion") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 8 + static_cast<int>(rng() % 5);
        ThreeGraph host = testutil::random_subgraph(make_bipartite_B(n), 4, 5, rng);
        CHECK(!contains_F33(host).has_value());
    }
}

TEST_CASE("find_dense_four_set") {
    SUBCASE("complete K3_4") {
        auto s = find_dense_four_set(make_complete(4));
        REQUIRE(s.has_value());
        CHECK(*s == std::array<int, 4>{0, 1, 2, 3});
    }
    SUBCASE("B(10) is dense enough to force one") {
        ThreeGraph b = make_bipartite_B(10);
        CHECK(b.density() > Rational(3, 4));
        auto s = find_dense_four_set(b);
        REQUIRE(s.has_value());
        auto& q = *s;
        CHECK(b.has_edge(q[0], q[1], q[2]));
        CHECK(b.has_edge(q[0], q[1], q[3]));
        CHECK(b.has_edge(q[0], q[2], q[3]));
        CHECK(b.has_edge(q[1], q[2], q[3]));
    }
    SUBCASE("empty graph has none") {
        CHECK(!find_dense_four_set(ThreeGraph(6)).has_value());
    }
}

TEST_CASE("t-connection") {
    SUBCASE("any pair of K3_5 is t-connected") {
        ThreeGraph k5 = make_complete(5);
        for (int x = 0; x < 5; ++x)
            for (int y = x + 1; y < 5; ++y) {
                auto w = is_t_connected(k5, x, y);
                REQUIRE(w.has_value());
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        CHECK(k5.has_edge((*w)[static_cast<size_t>(i)],
                                          (*w)[static_cast<size_t>(j)], x));
                        CHECK(k5.has_edge((*w)[static_cast<size_t>(i)],
                                          (*w)[static_cast<size_t>(j)], y));
                    }
            }
    }
    SUBCASE("empty graph connects nothing") {
        CHECK(!is_t_connected(ThreeGraph(6), 0, 1).has_value());
    }
    SUBCASE("B(8): same-part pairs are t-connected, cross pairs are not") {
        ThreeGraph b = make_bipartite_B(8);
        auto w = is_t_connected(b, 0, 1);  // both in part A
        REQUIRE(w.has_value());
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                CHECK(b.has_edge((*w)[static_cast<size_t>(i)], (*w)[static_cast<size_t>(j)], 0));
                CHECK(b.has_edge((*w)[static_cast<size_t>(i)], (*w)[static_cast<size_t>(j)], 1));
            }
        // the brute-force scan is the oracle: no abc set t-connects a cross pair
        CHECK(!is_t_connected(b, 0, 4).has_value());
        CHECK(!is_t_connected(b, 3, 7).has_value());
    }
}

TEST_CASE("t-triples") {
    SUBCASE("K3_5 is a t-triple") {
        auto t = find_t_triple(make_complete(5));
        REQUIRE(t.has_value());
    }
    SUBCASE("edgeless graphs have none") {
        CHECK(!find_t_triple(ThreeGraph(7)).has_value());
    }
    SUBCASE("complete bipartite graphs have none") {
        CHECK(!find_t_triple(make_bipartite_B(12)).has_value());
    }
    SUBCASE("an F33 copy forces a t-triple") {
        std::mt19937_64 rng(808);
        int hits = 0;
        for (int trial = 0; trial < 200 && hits < 25; ++trial) {
            int n = 6 + static_cast<int>(rng() % 3);
            ThreeGraph g = testutil::random_three_graph(n, 4, 5, rng);
            if (!contains_F33(g)) continue;
            ++hits;
            CHECK(find_t_triple(g).has_value());
        }
        CHECK(hits > 0);
    }
}
