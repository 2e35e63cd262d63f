#include "turan/pattern_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "turan/constructions.hpp"

namespace turan {

Pattern Pattern::f33() {
    return Pattern{make_F33(), {{0, 1, 2}, {3, 4, 5}}};
}

Pattern Pattern::single_edge() {
    std::vector<Triple> e{Triple{0, 1, 2}};
    return Pattern{ThreeGraph::from_triples(3, e), {{0, 1, 2}}};
}

Pattern Pattern::complete(int t) {
    std::vector<int> all(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) all[static_cast<size_t>(i)] = i;
    return Pattern{make_complete(t), {all}};
}

bool witness_valid(const ThreeGraph& host, const Pattern& p, const Witness& w) {
    const int pn = p.graph.vertex_count();
    if (static_cast<int>(w.image.size()) != pn) return false;
    std::vector<int> sorted = w.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : w.image)
        if (v < 0 || v >= host.vertex_count()) return false;
    for (const Triple& t : p.graph.edges())
        if (!host.has_edge(w.image[static_cast<size_t>(t.u)], w.image[static_cast<size_t>(t.v)],
                           w.image[static_cast<size_t>(t.w)]))
            return false;
    return true;
}

namespace {

// Pair bitsets of every vertex link, plus masks of pairs touching a vertex.
struct LinkTable {
    std::vector<Bits> link;   // link[a]: colex pair ranks xy with axy an edge
    std::vector<Bits> touch;  // touch[v]: pairs containing v

    explicit LinkTable(const ThreeGraph& g) {
        const int n = g.vertex_count();
        const size_t pair_bits = static_cast<size_t>(binom2(n));
        link.assign(static_cast<size_t>(n), Bits(pair_bits));
        touch.assign(static_cast<size_t>(n), Bits(pair_bits));
        for (const Triple& t : g.edges()) {
            link[static_cast<size_t>(t.u)].set(static_cast<size_t>(pair_rank(t.v, t.w)));
            link[static_cast<size_t>(t.v)].set(static_cast<size_t>(pair_rank(t.u, t.w)));
            link[static_cast<size_t>(t.w)].set(static_cast<size_t>(pair_rank(t.u, t.v)));
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                size_t r = static_cast<size_t>(pair_rank(u, v));
                touch[static_cast<size_t>(u)].set(r);
                touch[static_cast<size_t>(v)].set(r);
            }
    }
};

// Lexicographically smallest triangle in a pair bitset over n vertices.
std::optional<Triple> triangle_in_pair_bits(const Bits& pairs, int n,
                                            const std::vector<std::pair<int, int>>& pair_of_rank) {
    std::vector<Bits> row(static_cast<size_t>(n), Bits(static_cast<size_t>(n)));
    for (size_t r = pairs.find_first(); r != Bits::npos; r = pairs.find_next(r)) {
        auto [u, v] = pair_of_rank[r];
        row[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        row[static_cast<size_t>(v)].set(static_cast<size_t>(u));
    }
    for (int u = 0; u < n; ++u) {
        const Bits& ru = row[static_cast<size_t>(u)];
        if (ru.none()) continue;
        for (size_t v = ru.find_next(static_cast<size_t>(u)); v != Bits::npos;
             v = ru.find_next(v)) {
            Bits common = ru & row[v];
            size_t w = common.find_next(v);
            if (w != Bits::npos) return Triple{u, static_cast<int>(v), static_cast<int>(w)};
        }
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> pair_rank_table(int n) {
    std::vector<std::pair<int, int>> table(static_cast<size_t>(binom2(n)));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) table[static_cast<size_t>(pair_rank(u, v))] = {u, v};
    return table;
}

// Scans edges [begin, end) of `edges` for an F33 with apex edge abc; returns
// the witness with the lexicographically smallest (abc, xyz) in that range.
std::optional<Witness> scan_f33_range(const std::vector<Triple>& edges, size_t begin, size_t end,
                                      const LinkTable& links, int n,
                                      const std::vector<std::pair<int, int>>& pair_of_rank,
                                      const std::atomic<size_t>* stop_before) {
    for (size_t i = begin; i < end; ++i) {
        if (stop_before && stop_before->load(std::memory_order_relaxed) <= begin) return std::nullopt;
        const Triple& e = edges[i];
        Bits common = links.link[static_cast<size_t>(e.u)] & links.link[static_cast<size_t>(e.v)];
        if (common.none()) continue;
        common &= links.link[static_cast<size_t>(e.w)];
        if (common.none()) continue;
        common -= links.touch[static_cast<size_t>(e.u)];
        common -= links.touch[static_cast<size_t>(e.v)];
        common -= links.touch[static_cast<size_t>(e.w)];
        if (common.count() < 3) continue;
        if (auto tri = triangle_in_pair_bits(common, n, pair_of_rank))
            return Witness{{e.u, e.v, e.w, tri->u, tri->v, tri->w}};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> contains_F33(const ThreeGraph& g, const SearchOptions& opts) {
    const int n = g.vertex_count();
    if (n < 6 || g.edge_count() < 10) return std::nullopt;

    LinkTable links(g);
    std::vector<Triple> edges = g.edges();  // ascending lex, so the first hit is lex-min
    std::vector<std::pair<int, int>> pair_of_rank = pair_rank_table(n);

    int threads = std::max(1, opts.threads);
    size_t chunk_count = std::min<size_t>(static_cast<size_t>(threads) * 4, edges.size());
    if (threads == 1 || chunk_count <= 1)
        return scan_f33_range(edges, 0, edges.size(), links, n, pair_of_rank, nullptr);

    // Parallel scan over chunks of the edge list. Chunks are ordered by edge
    // rank, so taking the result of the earliest successful chunk yields the
    // same witness as the sequential scan; presence/absence is independent of
    // scheduling either way.
    std::atomic<size_t> first_hit{edges.size()};
    std::vector<std::optional<Witness>> results(chunk_count);
    std::atomic<size_t> next_chunk{0};
    size_t per_chunk = (edges.size() + chunk_count - 1) / chunk_count;

    auto worker = [&]() {
        for (size_t c = next_chunk.fetch_add(1); c < chunk_count; c = next_chunk.fetch_add(1)) {
            size_t begin = c * per_chunk;
            size_t end = std::min(edges.size(), begin + per_chunk);
            if (begin >= end) continue;
            if (first_hit.load(std::memory_order_relaxed) <= begin) continue;
            auto found = scan_f33_range(edges, begin, end, links, n, pair_of_rank, &first_hit);
            if (found) {
                results[c] = std::move(found);
                size_t cur = first_hit.load();
                while (begin < cur && !first_hit.compare_exchange_weak(cur, begin)) {}
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

namespace {

struct BacktrackState {
    const ThreeGraph& host;
    const Pattern& pattern;
    std::vector<std::vector<Triple>> edges_ending_at;  // pattern edges whose max vertex is i
    std::vector<long long> host_degree;
    std::vector<long long> pattern_degree;
    std::vector<int> orbit_predecessor;  // previous member of my orbit class, or -1
    std::vector<int> image;
    std::vector<char> used;
};

bool backtrack(BacktrackState& st, int next) {
    const int pn = st.pattern.graph.vertex_count();
    if (next == pn) return true;
    int lo = 0;
    if (int pred = st.orbit_predecessor[static_cast<size_t>(next)]; pred >= 0)
        lo = st.image[static_cast<size_t>(pred)] + 1;  // orbit classes map in increasing order
    for (int cand = lo; cand < st.host.vertex_count(); ++cand) {
        if (st.used[static_cast<size_t>(cand)]) continue;
        if (st.host_degree[static_cast<size_t>(cand)] < st.pattern_degree[static_cast<size_t>(next)])
            continue;
        bool ok = true;
        for (const Triple& t : st.edges_ending_at[static_cast<size_t>(next)]) {
            int a = t.u == next ? cand : st.image[static_cast<size_t>(t.u)];
            int b = t.v == next ? cand : st.image[static_cast<size_t>(t.v)];
            int c = t.w == next ? cand : st.image[static_cast<size_t>(t.w)];
            if (!st.host.has_edge(a, b, c)) { ok = false; break; }
        }
        if (!ok) continue;
        st.image[static_cast<size_t>(next)] = cand;
        st.used[static_cast<size_t>(cand)] = 1;
        if (backtrack(st, next + 1)) return true;
        st.used[static_cast<size_t>(cand)] = 0;
        st.image[static_cast<size_t>(next)] = -1;
    }
    return false;
}

}  // namespace

std::optional<Witness> contains_pattern(const ThreeGraph& g, const Pattern& p,
                                        const SearchOptions&) {
    const int pn = p.graph.vertex_count();
    if (pn > g.vertex_count()) return std::nullopt;
    if (p.graph.edge_count() == 0 && pn == 0) return Witness{{}};

    // Assign pattern vertices in index order with ascending candidates; the
    // first complete assignment is the lexicographically smallest witness
    // compatible with the orbit ordering, which is the global lex minimum
    // when orbit classes are genuine automorphism orbits.
    BacktrackState st{g, p, {}, {}, {}, {}, {}, {}};
    st.edges_ending_at.assign(static_cast<size_t>(pn), {});
    for (const Triple& t : p.graph.edges())
        st.edges_ending_at[static_cast<size_t>(t.w)].push_back(t);

    st.host_degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (const Triple& t : g.edges()) {
        ++st.host_degree[static_cast<size_t>(t.u)];
        ++st.host_degree[static_cast<size_t>(t.v)];
        ++st.host_degree[static_cast<size_t>(t.w)];
    }
    st.pattern_degree.assign(static_cast<size_t>(pn), 0);
    for (const Triple& t : p.graph.edges()) {
        ++st.pattern_degree[static_cast<size_t>(t.u)];
        ++st.pattern_degree[static_cast<size_t>(t.v)];
        ++st.pattern_degree[static_cast<size_t>(t.w)];
    }

    st.orbit_predecessor.assign(static_cast<size_t>(pn), -1);
    for (const auto& orbit : p.orbits)
        for (size_t i = 1; i < orbit.size(); ++i)
            st.orbit_predecessor[static_cast<size_t>(orbit[i])] = orbit[i - 1];

    st.image.assign(static_cast<size_t>(pn), -1);
    st.used.assign(static_cast<size_t>(g.vertex_count()), 0);
    if (backtrack(st, 0)) return Witness{st.image};
    return std::nullopt;
}

std::optional<std::array<int, 4>> find_dense_four_set(const ThreeGraph& g) {
    const int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument("find_dense_four_set: needs n >= 4");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.has_edge(a, b, d) && g.has_edge(a, c, d) && g.has_edge(b, c, d))
                        return std::array<int, 4>{a, b, c, d};
            }
    return std::nullopt;
}

std::optional<std::array<int, 3>> is_t_connected(const ThreeGraph& g, int x, int y) {
    const int n = g.vertex_count();
    if (x == y) throw std::invalid_argument("is_t_connected: x and y must differ");
    if (x < 0 || y < 0 || x >= n || y >= n)
        throw std::invalid_argument("is_t_connected: vertex out of range");
    for (int a = 0; a < n; ++a) {
        if (a == x || a == y) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == x || b == y) continue;
            if (!g.has_edge(a, b, x) || !g.has_edge(a, b, y)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (c == x || c == y) continue;
                if (g.has_edge(a, c, x) && g.has_edge(a, c, y) && g.has_edge(b, c, x) &&
                    g.has_edge(b, c, y))
                    return std::array<int, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

std::optional<TTriple> find_t_triple(const ThreeGraph& g) {
    for (const Triple& e : g.edges()) {
        auto w_uv = is_t_connected(g, e.u, e.v);
        if (!w_uv) continue;
        auto w_uw = is_t_connected(g, e.u, e.w);
        if (!w_uw) continue;
        auto w_vw = is_t_connected(g, e.v, e.w);
        if (!w_vw) continue;
        return TTriple{e, {*w_uv, *w_uw, *w_vw}};
    }
    return std::nullopt;
}

}  // namespace turan
