#include "turan/turan_solver.hpp"

#include <algorithm>
#include <set>

#include "turan/constructions.hpp"
#include "turan/pattern_search.hpp"

namespace turan {

namespace {

// Edge ranks of the F33 copy with apex edge abc and triangle xyz.
std::vector<long long> copy_edge_ranks(const std::array<int, 3>& abc,
                                       const std::array<int, 3>& xyz) {
    std::vector<long long> ranks;
    ranks.reserve(10);
    Triple t = make_triple(abc[0], abc[1], abc[2]);
    ranks.push_back(triple_rank(t.u, t.v, t.w));
    for (int a : abc)
        for (size_t j = 0; j < 3; ++j)
            for (size_t k = j + 1; k < 3; ++k) {
                Triple e = make_triple(a, xyz[j], xyz[k]);
                ranks.push_back(triple_rank(e.u, e.v, e.w));
            }
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

}  // namespace

CopyCatalog enumerate_copies(int n) {
    CopyCatalog catalog;
    catalog.n = n;
    if (n < 6) return catalog;

    std::set<std::vector<long long>> seen;
    std::array<int, 6> six{};
    // All 6-subsets in ascending order, then every 3-subset as the triangle.
    for (six[0] = 0; six[0] < n; ++six[0])
        for (six[1] = six[0] + 1; six[1] < n; ++six[1])
            for (six[2] = six[1] + 1; six[2] < n; ++six[2])
                for (six[3] = six[2] + 1; six[3] < n; ++six[3])
                    for (six[4] = six[3] + 1; six[4] < n; ++six[4])
                        for (six[5] = six[4] + 1; six[5] < n; ++six[5])
                            for (int i = 0; i < 6; ++i)
                                for (int j = i + 1; j < 6; ++j)
                                    for (int k = j + 1; k < 6; ++k) {
                                        std::array<int, 3> xyz{six[static_cast<size_t>(i)],
                                                               six[static_cast<size_t>(j)],
                                                               six[static_cast<size_t>(k)]};
                                        std::array<int, 3> abc{};
                                        int idx = 0;
                                        for (int p = 0; p < 6; ++p)
                                            if (p != i && p != j && p != k)
                                                abc[static_cast<size_t>(idx++)] =
                                                    six[static_cast<size_t>(p)];
                                        auto ranks = copy_edge_ranks(abc, xyz);
                                        if (seen.insert(ranks).second)
                                            catalog.copies.push_back(std::move(ranks));
                                    }
    return catalog;
}

namespace {

struct HittingSearch {
    const CopyCatalog& catalog;
    size_t triple_count;
    std::vector<Bits> copy_bits;

    Bits deleted;
    Bits forbidden;
    long long deleted_count = 0;

    long long best_size;
    Bits best_set;
    bool seeded_is_best = true;

    std::uint64_t nodes = 0;
    std::uint64_t node_limit;
    bool truncated = false;

    // When enumerating, collect every hitting set of size exactly best_size.
    bool enumerate_mode = false;
    std::set<std::vector<long long>> found_sets;

    HittingSearch(const CopyCatalog& cat, long long initial_size, Bits initial_set,
                  std::uint64_t limit)
        : catalog(cat),
          triple_count(static_cast<size_t>(binom3(cat.n))),
          deleted(triple_count),
          forbidden(triple_count),
          best_size(initial_size),
          best_set(std::move(initial_set)),
          node_limit(limit) {
        copy_bits.reserve(catalog.copies.size());
        for (const auto& copy : catalog.copies) {
            Bits b(triple_count);
            for (long long r : copy) b.set(static_cast<size_t>(r));
            copy_bits.push_back(std::move(b));
        }
    }

    long long packing_bound() const {
        Bits used(triple_count);
        long long packed = 0;
        for (size_t i = 0; i < copy_bits.size(); ++i) {
            if (copy_bits[i].intersects(deleted)) continue;  // already hit
            Bits open = copy_bits[i] - forbidden;
            if (open.none()) continue;  // dead copy; caller prunes via select
            if (open.intersects(used)) continue;
            used |= open;
            ++packed;
        }
        return packed;
    }

    // Unhit copy with the fewest branchable edges; ties broken by catalog
    // order. Returns npos when everything is hit.
    size_t select_copy(bool& dead) const {
        size_t chosen = SIZE_MAX;
        size_t fewest = SIZE_MAX;
        dead = false;
        for (size_t i = 0; i < copy_bits.size(); ++i) {
            if (copy_bits[i].intersects(deleted)) continue;
            size_t open = (copy_bits[i] - forbidden).count();
            if (open == 0) { dead = true; return i; }
            if (open < fewest) {
                fewest = open;
                chosen = i;
            }
        }
        return chosen;
    }

    void record_solution() {
        if (enumerate_mode) {
            std::vector<long long> ranks;
            for (size_t r = deleted.find_first(); r != Bits::npos; r = deleted.find_next(r))
                ranks.push_back(static_cast<long long>(r));
            found_sets.insert(std::move(ranks));
            return;
        }
        if (deleted_count < best_size) {
            best_size = deleted_count;
            best_set = deleted;
            seeded_is_best = false;
        }
    }

    void dfs() {
        if (++nodes >= node_limit) truncated = true;
        if (truncated) return;

        bool dead = false;
        size_t copy = select_copy(dead);
        if (copy == SIZE_MAX) {  // all copies hit
            record_solution();
            return;
        }
        if (dead) return;

        if (enumerate_mode) {
            if (deleted_count >= best_size) return;  // no room for the unhit copy
        } else {
            if (deleted_count + std::max(packing_bound(), 1LL) >= best_size) return;
        }

        std::vector<size_t> open;
        const Bits& cb = copy_bits[copy];
        for (size_t r = cb.find_first(); r != Bits::npos; r = cb.find_next(r))
            if (!forbidden.test(r)) open.push_back(r);

        // Branch i deletes edge open[i] and forbids open[0..i-1], so each
        // minimal hitting set is generated exactly once.
        for (size_t i = 0; i < open.size(); ++i) {
            deleted.set(open[i]);
            ++deleted_count;
            dfs();
            deleted.reset(open[i]);
            --deleted_count;
            if (truncated) return;
            forbidden.set(open[i]);
        }
        for (size_t r : open) forbidden.reset(r);
    }
};

// Deletion set whose complement is B(n): all triples inside either part.
Bits within_part_triples(int n) {
    Bits bits(static_cast<size_t>(binom3(n)));
    int size_a = n / 2;
    auto add_part = [&](int lo, int hi) {  // vertices lo..hi-1
        for (int u = lo; u < hi; ++u)
            for (int v = u + 1; v < hi; ++v)
                for (int w = v + 1; w < hi; ++w)
                    bits.set(static_cast<size_t>(triple_rank(u, v, w)));
    };
    add_part(0, size_a);
    add_part(size_a, n);
    return bits;
}

ThreeGraph complement_of_deletions(int n, const Bits& deleted) {
    Bits edges(static_cast<size_t>(binom3(n)));
    edges.set();
    edges -= deleted;
    return ThreeGraph::from_edge_bits(n, edges);
}

bool hits_all(const CopyCatalog& catalog, const Bits& deleted) {
    for (const auto& copy : catalog.copies) {
        bool hit = false;
        for (long long r : copy)
            if (deleted.test(static_cast<size_t>(r))) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

long long greedy_packing_bound(const CopyCatalog& catalog) {
    HittingSearch search(catalog, 0, Bits(static_cast<size_t>(binom3(catalog.n))), UINT64_MAX);
    return search.packing_bound();
}

TuranCertificate exact_turan(int n, std::optional<std::uint64_t> node_limit) {
    if (n < 1) throw std::invalid_argument("exact_turan: n must be >= 1");

    CopyCatalog catalog = enumerate_copies(n);
    const long long total_triples = binom3(n);

    if (catalog.copies.empty()) {
        // No 6 vertices, so the complete graph is F33-free.
        TuranCertificate cert{n, total_triples, make_complete(n), true, 0};
        return cert;
    }

    // Seed the incumbent with the within-part deletion set (complement of
    // B(n)) after verifying it really hits every copy; the search then only
    // has to refute anything smaller.
    Bits seed = within_part_triples(n);
    if (!hits_all(catalog, seed))
        throw std::logic_error("exact_turan: bipartite seed fails to hit all copies");

    HittingSearch search(catalog, static_cast<long long>(seed.count()), seed,
                         node_limit.value_or(UINT64_MAX));
    search.dfs();

    TuranCertificate cert{n, total_triples - search.best_size,
                          complement_of_deletions(n, search.best_set), !search.truncated,
                          search.nodes};
    return cert;
}

std::vector<ThreeGraph> enumerate_extremal(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_extremal: desk scale is 1 <= n <= 7");

    TuranCertificate cert = exact_turan(n);
    CopyCatalog catalog = enumerate_copies(n);
    const long long min_deletions = binom3(n) - cert.optimum;

    std::vector<ThreeGraph> classes;
    if (catalog.copies.empty()) {
        classes.push_back(make_complete(n));
        return classes;
    }

    HittingSearch search(catalog, min_deletions, Bits(static_cast<size_t>(binom3(n))), UINT64_MAX);
    search.enumerate_mode = true;
    search.dfs();

    std::set<Bits> canon_seen;
    std::vector<ThreeGraph> out;
    for (const auto& ranks : search.found_sets) {
        if (static_cast<long long>(ranks.size()) != min_deletions) continue;
        Bits deleted(static_cast<size_t>(binom3(n)));
        for (long long r : ranks) deleted.set(static_cast<size_t>(r));
        ThreeGraph candidate = complement_of_deletions(n, deleted);
        ThreeGraph canon = canonical_form(candidate);
        if (canon_seen.insert(canon.edge_bits()).second) out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [](const ThreeGraph& a, const ThreeGraph& b) {
        return a.edge_bits() < b.edge_bits();
    });
    return out;
}

ThreeGraph canonical_form(const ThreeGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_form: exhaustive permutations need n <= 8");
    std::vector<Triple> edges = g.edges();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

    std::optional<Bits> best;
    do {
        Bits bits(static_cast<size_t>(binom3(n)));
        for (const Triple& t : edges) {
            Triple m = make_triple(perm[static_cast<size_t>(t.u)], perm[static_cast<size_t>(t.v)],
                                   perm[static_cast<size_t>(t.w)]);
            bits.set(static_cast<size_t>(triple_rank(m.u, m.v, m.w)));
        }
        if (!best || bits < *best) best = std::move(bits);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return ThreeGraph::from_edge_bits(n, best ? *best : Bits(static_cast<size_t>(binom3(n))));
}

AuditResult audit_certificate(const TuranCertificate& cert) {
    if (cert.witness.vertex_count() != cert.n)
        return {false, "witness vertex count differs from certificate n"};
    if (cert.witness.edge_count() != cert.optimum)
        return {false, "witness edge count differs from claimed optimum"};
    if (contains_F33(cert.witness))
        return {false, "witness contains F33"};
    long long lower = cert.n == 5 ? 10 : count_b(cert.n);
    if (cert.optimum < lower)
        return {false, "optimum below the bipartite lower bound"};
    return {true, ""};
}

}  // namespace turan
