#include <doctest.h>

#include "turan/constructions.hpp"

using namespace turan;

TEST_CASE("F33 has the advertised shape") {
    ThreeGraph f = make_F33();
    CHECK(f.vertex_count() == 6);
    CHECK(f.edge_count() == 10);
    CHECK(f.has_edge(0, 1, 2));
    CHECK(!f.has_edge(3, 4, 5));
    // degree of an abc vertex: the abc edge plus 3 cross edges
    CHECK(f.incident_count(std::vector<int>{0}) == 4);
    // degree of an xyz vertex: 3 apexes times 2 pairs through it
    CHECK(f.incident_count(std::vector<int>{3}) == 6);
}

TEST_CASE("bipartite construction matches the b(n) count") {
    CHECK(count_b(3) == 1);
    CHECK(count_b(5) == 9);
    CHECK(count_b(6) == 18);
    CHECK(count_b(7) == 30);
    for (int n = 0; n <= 200; ++n)
        CHECK(make_bipartite_B(n).edge_count() == count_b(n));
}

TEST_CASE("no B(n) edge lies inside a part") {
    for (int n = 0; n <= 60; ++n) {
        BipartitionSpec parts = BipartitionSpec::balanced(n);
        for (const Triple& t : make_bipartite_B(n).edges()) {
            bool all_a = parts.in_part_a(t.u) && parts.in_part_a(t.v) && parts.in_part_a(t.w);
            bool all_b = !parts.in_part_a(t.u) && !parts.in_part_a(t.v) && !parts.in_part_a(t.w);
            CHECK(!all_a);
            CHECK(!all_b);
        }
    }
}

TEST_CASE("count_m parity-split values") {
    CHECK(count_m(0) == 0);
    CHECK(count_m(1) == 0);
    CHECK(count_m(2) == 4);
    CHECK(count_m(3) == 10);
    CHECK(count_m(4) == 20);
    CHECK(count_m(5) == 32);
    CHECK(count_m(6) == 48);
    CHECK(count_m(12) == 204);
}

TEST_CASE("complete graph edge counts") {
    CHECK(make_complete(5).edge_count() == 10);
    CHECK(make_complete(2).edge_count() == 0);
    CHECK(make_complete(6).edge_count() == 20);
}

TEST_CASE("M1 and M2 hit m(n) exactly") {
    CHECK(make_M1(6).total_weight() == 48);
    CHECK(make_M1(5).total_weight() == 32);
    CHECK(make_M2(6).total_weight() == 48);
    CHECK(make_M2(5).total_weight() == 32);
    CHECK(make_M2(2).total_weight() == 4);
    CHECK(make_M1(1).total_weight() == 0);
    for (int n = 0; n <= 200; ++n) {
        long long m = count_m(n);
        CHECK(make_M1(n).total_weight() == m);
        CHECK(make_M2(n).total_weight() == m);
        CHECK(e_M1_formula(n) == m);
        CHECK(e_M2_formula(n) == m);
    }
}

TEST_CASE("M2 matching structure") {
    Multigraph m = make_M2(7);
    CHECK(m.weight(0, 1) == 4);
    CHECK(m.weight(2, 3) == 4);
    CHECK(m.weight(4, 5) == 4);
    CHECK(m.weight(1, 2) == 3);
    // odd n: the last vertex touches no multiplicity-4 pair
    for (int v = 0; v < 6; ++v) CHECK(m.weight(v, 6) == 3);
}

TEST_CASE("four-part construction") {
    SUBCASE("n=4 by hand: two 4s on the special part-pairs, four 3s") {
        Multigraph m = make_M3_fourpart(4);
        CHECK(m.weight(0, 1) == 4);  // W-X
        CHECK(m.weight(2, 3) == 4);  // Y-Z
        CHECK(m.weight(0, 2) == 3);
        CHECK(m.weight(0, 3) == 3);
        CHECK(m.weight(1, 2) == 3);
        CHECK(m.weight(1, 3) == 3);
        CHECK(m.total_weight() == 20);
        CHECK(m.total_weight() == count_m(4));
    }
    SUBCASE("caps hold under exhaustive triple scan") {
        for (int n = 3; n <= 40; ++n) {
            Multigraph m = make_M3_fourpart(n);
            CHECK(m.max_triple_sum().sum <= 10);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    CHECK(m.weight(u, v) >= 2);
                    CHECK(m.weight(u, v) <= 4);
                }
        }
        CHECK(make_M3_fourpart(8).max_triple_sum().sum == 10);
    }
    SUBCASE("edge count equals m(n) when 4 divides n") {
        for (int n = 4; n <= 200; n += 4)
            CHECK(make_M3_fourpart(n).total_weight() == count_m(n));
    }
}

TEST_CASE("identity suite") {
    SUBCASE("passes up to n=1000") {
        IdentityReport report = check_identities(1000);
        CHECK(report.all_ok);
        CHECK(report.families.size() == 4);
        for (const auto& f : report.families) CHECK(f.ok);
    }
    SUBCASE("spot values") {
        CHECK(count_m(6) - count_m(5) == 16);
        CHECK(16 == 3 * 5 + 1);
        CHECK(Rational(count_b(6), binom3(6)) == Rational(9, 10));
        CHECK(Rational(9, 10) >= Rational(3, 4));
    }
    SUBCASE("max_n below 5 is rejected") {
        CHECK_THROWS_AS(check_identities(4), std::invalid_argument);
    }
}
