#include "turan/lemma_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace turan {

namespace {

std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> t(static_cast<size_t>(binom2(n)));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) t[static_cast<size_t>(pair_rank(u, v))] = {u, v};
    return t;
}

struct Searcher {
    int n;
    int pair_cap;
    int triple_cap;
    bool symmetry;
    std::uint64_t node_limit;

    size_t pair_count;
    std::vector<std::pair<int, int>> pairs;  // colex rank -> (u,v)
    std::vector<int> block_of_rank;          // k if assigning this rank completes block k, else 0
    std::vector<std::array<size_t, 3>> triple_pairs;  // pair ranks of each triple

    std::vector<int> w;  // current partial assignment, -1 = unassigned
    long long current = 0;

    long long best = -1;
    std::vector<int> best_w;

    std::uint64_t nodes = 0;
    bool truncated = false;

    explicit Searcher(const LemmaSearchConfig& cfg)
        : n(cfg.n),
          pair_cap(cfg.pair_cap),
          triple_cap(cfg.triple_cap),
          symmetry(cfg.symmetry_reduction),
          node_limit(cfg.node_limit.value_or(UINT64_MAX)),
          pair_count(static_cast<size_t>(binom2(n))),
          pairs(pair_table(n)) {
        block_of_rank.assign(pair_count, 0);
        for (int k = 2; k <= n; ++k)
            block_of_rank[static_cast<size_t>(binom2(k)) - 1] = k;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int z = v + 1; z < n; ++z)
                    triple_pairs.push_back({static_cast<size_t>(pair_rank(u, v)),
                                            static_cast<size_t>(pair_rank(u, z)),
                                            static_cast<size_t>(pair_rank(v, z))});
        w.assign(pair_count, -1);
    }

    // Largest weight the already assigned triples allow at this pair. In
    // colex order the fully assigned triples through (u,v) are exactly those
    // with third vertex z < u.
    int max_value(size_t rank) const {
        auto [u, v] = pairs[rank];
        int mx = pair_cap;
        for (int z = 0; z < u && mx >= 0; ++z)
            mx = std::min(mx, triple_cap - w[static_cast<size_t>(pair_rank(z, u))] -
                                  w[static_cast<size_t>(pair_rank(z, v))]);
        return mx;
    }

    // Admissible upper bound on the best completion from `rank` onwards:
    // per-pair caps tightened by assigned triples, intersected with the
    // triple-sum average over all C(n,3) triples.
    long long upper_bound(size_t rank) const {
        long long future = 0;
        for (size_t r = rank; r < pair_count; ++r) {
            auto [u, v] = pairs[r];
            int ub = pair_cap;
            for (int z = 0; z < u && ub > 0; ++z) {
                size_t rv = static_cast<size_t>(pair_rank(z, v));
                if (w[rv] < 0) break;  // colex: later z are assigned even later
                ub = std::min(ub, triple_cap - w[static_cast<size_t>(pair_rank(z, u))] - w[rv]);
            }
            future += std::max(ub, 0);
        }
        long long bound = current + future;

        if (n >= 3) {
            long long triple_total = 0;
            for (const auto& tp : triple_pairs) {
                int assigned = 0, missing = 0;
                for (size_t r : tp) {
                    if (w[r] >= 0) assigned += w[r];
                    else ++missing;
                }
                triple_total += std::min<long long>(triple_cap, assigned + missing * pair_cap);
            }
            bound = std::min(bound, triple_total / (n - 2));
        }
        return bound;
    }

    // A completed block {0..k-1} survives only if no relabeling makes its
    // colex weight code lexicographically larger; every multigraph has a
    // labeling all of whose prefixes pass, so the optimum is preserved.
    bool block_is_canonical(int k) const {
        std::vector<int> perm(static_cast<size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        const size_t code_len = static_cast<size_t>(binom2(k));
        while (std::next_permutation(perm.begin(), perm.end())) {
            for (size_t r = 0; r < code_len; ++r) {
                auto [u, v] = pairs[r];
                int pu = perm[static_cast<size_t>(u)], pv = perm[static_cast<size_t>(v)];
                if (pu > pv) std::swap(pu, pv);
                int mapped = w[static_cast<size_t>(pair_rank(pu, pv))];
                if (mapped > w[r]) return false;  // relabeling beats us
                if (mapped < w[r]) break;         // we beat this relabeling
            }
        }
        return true;
    }

    void dfs(size_t rank) {
        if (++nodes >= node_limit) truncated = true;
        if (truncated) return;
        if (rank == pair_count) {
            if (current > best) {
                best = current;
                best_w = w;
            }
            return;
        }
        if (best >= 0 && upper_bound(rank) <= best) return;
        int mx = max_value(rank);
        for (int t = mx; t >= 0; --t) {
            w[rank] = t;
            current += t;
            int k = block_of_rank[rank];
            bool keep = !symmetry || k == 0 || k == n || block_is_canonical(k);
            if (keep) dfs(rank + 1);
            current -= t;
            w[rank] = -1;
            if (truncated) return;
        }
    }
};

}  // namespace

LemmaCertificate max_feasible_edges(const LemmaSearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("max_feasible_edges: n must be >= 1");
    if (cfg.pair_cap < 0 || cfg.triple_cap < 0)
        throw std::invalid_argument("max_feasible_edges: negative cap");

    Searcher s(cfg);
    s.dfs(0);

    LemmaCertificate cert{0, Multigraph(cfg.n, cfg.pair_cap), s.nodes, !s.truncated};
    cert.optimum = std::max(s.best, 0LL);
    if (s.best >= 0) {
        for (size_t r = 0; r < s.pair_count; ++r) {
            auto [u, v] = s.pairs[r];
            cert.maximizer.set_weight(u, v, s.best_w[r]);
        }
    }
    return cert;
}

bool verify_feasible(const Multigraph& m, const LemmaSearchConfig& cfg) {
    if (m.vertex_count() != cfg.n)
        throw std::invalid_argument("verify_feasible: vertex count mismatch");
    const int n = m.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int wv = m.weight(u, v);
            if (wv < 0 || wv > cfg.pair_cap) return false;
        }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int z = v + 1; z < n; ++z)
                if (m.weight(u, v) + m.weight(u, z) + m.weight(v, z) > cfg.triple_cap)
                    return false;
    return true;
}

FeasibleSampler::FeasibleSampler(int n, std::uint64_t seed, int pair_cap, int triple_cap)
    : n_(n), pair_cap_(pair_cap), triple_cap_(triple_cap), rng_(seed) {
    if (n < 0) throw std::invalid_argument("FeasibleSampler: negative n");
    if (2 * pair_cap > triple_cap && n >= 3)
        throw std::invalid_argument("FeasibleSampler: needs 2*pair_cap <= triple_cap");
}

Multigraph FeasibleSampler::next() {
    const size_t pair_count = static_cast<size_t>(binom2(n_));
    std::vector<std::pair<int, int>> pairs = pair_table(n_);
    std::vector<size_t> order(pair_count);
    std::iota(order.begin(), order.end(), size_t{0});
    // Hand-rolled Fisher-Yates so the stream is identical across platforms.
    for (size_t i = pair_count; i > 1; --i) {
        size_t j = rng_() % i;
        std::swap(order[i - 1], order[j]);
    }

    std::vector<int> w(pair_count, -1);
    for (size_t idx : order) {
        auto [u, v] = pairs[idx];
        int mx = pair_cap_;
        for (int z = 0; z < n_; ++z) {
            if (z == u || z == v) continue;
            int a = std::min(z, u), b = std::max(z, u);
            int c = std::min(z, v), d = std::max(z, v);
            int wzu = w[static_cast<size_t>(pair_rank(a, b))];
            int wzv = w[static_cast<size_t>(pair_rank(c, d))];
            if (wzu >= 0 && wzv >= 0) mx = std::min(mx, triple_cap_ - wzu - wzv);
        }
        w[idx] = mx <= 0 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(mx + 1));
    }

    Multigraph m(n_, pair_cap_);
    for (size_t r = 0; r < pair_count; ++r) m.set_weight(pairs[r].first, pairs[r].second, w[r]);
    return m;
}

}  // namespace turan
