#pragma once

#include <string>
#include <vector>

#include "turan/multigraph.hpp"
#include "turan/three_graph.hpp"

namespace turan {

// Balanced bipartition with part A = vertices 0..floor(n/2)-1.
struct BipartitionSpec {
    int n = 0;
    int size_a = 0;
    int size_b = 0;

    static BipartitionSpec balanced(int n) {
        return BipartitionSpec{n, n / 2, n - n / 2};
    }
    bool in_part_a(int v) const { return v < size_a; }
};

// F_{3,3}: vertices 0,1,2 = abc and 3,4,5 = xyz; edges are abc plus every
// triple with one vertex from abc and two from xyz.
ThreeGraph make_F33();

// Balanced complete bipartite 3-graph: all triples crossing the partition.
ThreeGraph make_bipartite_B(int n);

// b(n) = C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3).
long long count_b(long long n);

// m(n) = 3n^2/2 - n for even n, (3n^2-1)/2 - n for odd n.
long long count_m(long long n);

ThreeGraph make_complete(int n);

// M1(n): balanced bipartition, crossing pairs multiplicity 4, pairs inside
// each part multiplicity 2.
Multigraph make_M1(int n);

// M2(n): every pair multiplicity 3 except the prefix matching {0,1},{2,3},...
// at multiplicity 4; for odd n the last vertex is unmatched.
Multigraph make_M2(int n);

// Four balanced parts W,X,Y,Z (remainder vertices go to the earlier parts):
// within-part pairs 2, W-X and Y-Z pairs 4, the other four part-pairs 3.
Multigraph make_M3_fourpart(int n);

// Closed-form edge counts of M1/M2, exact for every n.
long long e_M1_formula(long long n);
long long e_M2_formula(long long n);

struct IdentityCheck {
    std::string family;
    bool ok = true;
    long long first_failure_n = -1;
    std::string detail;
};

struct IdentityReport {
    long long max_n = 0;
    std::vector<IdentityCheck> families;
    bool all_ok = true;
};

// Verifies, for every n up to max_n in exact arithmetic:
//   (i)   b(n) - b(n-4) = m(n-4) + 5(n-4) + 4          (n >= 4)
//   (ii)  m(n) - m(n-1) = 3(n-1)+1 (even n), 3(n-1) (odd n)
//   (iii) e(M1(n)) = e(M2(n)) = m(n), closed form everywhere and
//         materialized constructions up to n = 256
//   (iv)  d(B(n)) >= 3/4 (n >= 3) and d(B(n)) <= d(B(n-1)) (n >= 4)
// Requires max_n >= 5.
IdentityReport check_identities(long long max_n);

}  // namespace turan
