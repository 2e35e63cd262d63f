#include "turan/three_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace turan {

namespace {

void check_vertex_range(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
}

// Sorted, deduplicated copy of a vertex set, bounds-checked against n.
std::vector<int> canonical_vertex_set(std::span<const int> s, int n, const char* what) {
    std::vector<int> out(s.begin(), s.end());
    for (int v : out) check_vertex_range(v, n, what);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Triple make_triple(int a, int b, int c) {
    int lo = std::min({a, b, c});
    int hi = std::max({a, b, c});
    int mid = a + b + c - lo - hi;
    if (lo == mid || mid == hi)
        throw std::invalid_argument("make_triple: vertices must be distinct");
    return Triple{lo, mid, hi};
}

PairGraph::PairGraph(int n) : n_(n), bits_(static_cast<size_t>(binom2(n))) {
    if (n < 0) throw std::invalid_argument("PairGraph: negative vertex count");
}

PairGraph PairGraph::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    PairGraph p(n);
    for (auto [u, v] : pairs) p.add_pair(u, v);
    return p;
}

bool PairGraph::has_pair(int u, int v) const {
    if (u > v) std::swap(u, v);
    check_vertex_range(u, n_, "has_pair");
    check_vertex_range(v, n_, "has_pair");
    if (u == v) return false;
    return bits_.test(static_cast<size_t>(pair_rank(u, v)));
}

void PairGraph::add_pair(int u, int v) {
    if (u > v) std::swap(u, v);
    check_vertex_range(u, n_, "add_pair");
    check_vertex_range(v, n_, "add_pair");
    if (u == v) throw std::invalid_argument("add_pair: endpoints must be distinct");
    bits_.set(static_cast<size_t>(pair_rank(u, v)));
}

std::vector<std::pair<int, int>> PairGraph::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(bits_.count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (bits_.test(static_cast<size_t>(pair_rank(u, v)))) out.emplace_back(u, v);
    return out;
}

PairGraph PairGraph::restricted(std::span<const int> x) const {
    std::vector<int> keep = canonical_vertex_set(x, n_, "restricted");
    std::vector<int> relabel(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < keep.size(); ++i) relabel[static_cast<size_t>(keep[i])] = static_cast<int>(i);

    PairGraph out(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (bits_.test(static_cast<size_t>(pair_rank(keep[i], keep[j]))))
                out.add_pair(static_cast<int>(i), static_cast<int>(j));
    return out;
}

PairGraph operator&(const PairGraph& a, const PairGraph& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PairGraph intersection: size mismatch");
    PairGraph out(a.n_);
    out.bits_ = a.bits_ & b.bits_;
    return out;
}

std::optional<Triple> find_triangle(const PairGraph& p) {
    const int n = p.vertex_count();
    // Adjacency rows over n-bit sets; scan (u,v) ascending so the first hit
    // is the lexicographically smallest triangle.
    std::vector<Bits> row(static_cast<size_t>(n), Bits(static_cast<size_t>(n)));
    for (auto [u, v] : p.pairs()) {
        row[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        row[static_cast<size_t>(v)].set(static_cast<size_t>(u));
    }
    for (int u = 0; u < n; ++u) {
        for (size_t v = row[static_cast<size_t>(u)].find_next(static_cast<size_t>(u));
             v != Bits::npos; v = row[static_cast<size_t>(u)].find_next(v)) {
            Bits common = row[static_cast<size_t>(u)] & row[v];
            size_t w = common.find_next(v);
            if (w != Bits::npos)
                return Triple{u, static_cast<int>(v), static_cast<int>(w)};
        }
    }
    return std::nullopt;
}

ThreeGraph::ThreeGraph(int n) : n_(n), bits_(static_cast<size_t>(binom3(n))) {
    if (n < 0) throw std::invalid_argument("ThreeGraph: negative vertex count");
}

ThreeGraph ThreeGraph::from_triples(int n, std::span<const Triple> triples) {
    ThreeGraph g(n);
    for (const Triple& t : triples) {
        if (!(t.u < t.v && t.v < t.w))
            throw std::invalid_argument("from_triples: triple not in canonical ascending order");
        check_vertex_range(t.u, n, "from_triples");
        check_vertex_range(t.w, n, "from_triples");
        size_t r = static_cast<size_t>(triple_rank(t.u, t.v, t.w));
        if (g.bits_.test(r)) throw std::invalid_argument("from_triples: duplicate triple");
        g.bits_.set(r);
    }
    g.edge_count_ = static_cast<long long>(g.bits_.count());
    return g;
}

ThreeGraph ThreeGraph::from_edge_bits(int n, Bits bits) {
    ThreeGraph g(n);
    if (bits.size() != static_cast<size_t>(binom3(n)))
        throw std::invalid_argument("from_edge_bits: bitset size mismatch");
    g.bits_ = std::move(bits);
    g.edge_count_ = static_cast<long long>(g.bits_.count());
    return g;
}

bool ThreeGraph::has_edge(int u, int v, int w) const {
    Triple t = make_triple(u, v, w);
    check_vertex_range(t.w, n_, "has_edge");
    check_vertex_range(t.u, n_, "has_edge");
    return bits_.test(static_cast<size_t>(triple_rank(t.u, t.v, t.w)));
}

std::vector<Triple> ThreeGraph::edges() const {
    std::vector<Triple> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            for (int w = v + 1; w < n_; ++w)
                if (bits_.test(static_cast<size_t>(triple_rank(u, v, w))))
                    out.push_back(Triple{u, v, w});
    return out;
}

Rational ThreeGraph::density() const {
    if (n_ < 3)
        throw std::invalid_argument("density: undefined for n < 3");
    return Rational(edge_count_, binom3(n_));
}

ThreeGraph ThreeGraph::delete_vertices(std::span<const int> s) const {
    std::vector<int> del = canonical_vertex_set(s, n_, "delete_vertices");
    std::vector<int> relabel(static_cast<size_t>(n_), -1);
    int next = 0;
    size_t di = 0;
    for (int v = 0; v < n_; ++v) {
        if (di < del.size() && del[di] == v) { ++di; continue; }
        relabel[static_cast<size_t>(v)] = next++;
    }
    std::vector<Triple> kept;
    for (const Triple& t : edges()) {
        int a = relabel[static_cast<size_t>(t.u)];
        int b = relabel[static_cast<size_t>(t.v)];
        int c = relabel[static_cast<size_t>(t.w)];
        if (a >= 0 && b >= 0 && c >= 0) kept.push_back(Triple{a, b, c});
    }
    return from_triples(next, kept);
}

long long ThreeGraph::incident_count(std::span<const int> s) const {
    std::vector<int> set = canonical_vertex_set(s, n_, "incident_count");
    std::vector<char> in_s(static_cast<size_t>(n_), 0);
    for (int v : set) in_s[static_cast<size_t>(v)] = 1;
    long long count = 0;
    for (const Triple& t : edges())
        if (in_s[static_cast<size_t>(t.u)] || in_s[static_cast<size_t>(t.v)] ||
            in_s[static_cast<size_t>(t.w)])
            ++count;
    return count;
}

PairGraph ThreeGraph::vertex_link(int a) const {
    check_vertex_range(a, n_, "vertex_link");
    PairGraph link(n_);
    for (int x = 0; x < n_; ++x) {
        if (x == a) continue;
        for (int y = x + 1; y < n_; ++y) {
            if (y == a) continue;
            Triple t = make_triple(a, x, y);
            if (bits_.test(static_cast<size_t>(triple_rank(t.u, t.v, t.w)))) link.add_pair(x, y);
        }
    }
    return link;
}

std::string to_edge_list_text(const ThreeGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Triple& t : g.edges()) out << t.u << ' ' << t.v << ' ' << t.w << '\n';
    return out.str();
}

namespace {

long long parse_int_token(std::string_view line, size_t& pos, const char* what) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc())
        throw ParseError(std::string("edge list: expected ") + what);
    pos = static_cast<size_t>(ptr - line.data());
    return value;
}

void expect_line_end(std::string_view line, size_t pos) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos != line.size()) throw ParseError("edge list: trailing characters on line");
}

}  // namespace

ThreeGraph parse_edge_list_text(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            start = text.size();
        } else {
            lines.push_back(text.substr(start, end - start));
            start = end + 1;
        }
    }
    if (lines.empty()) throw ParseError("edge list: empty input");

    size_t pos = 0;
    long long n = parse_int_token(lines[0], pos, "vertex count");
    long long m = parse_int_token(lines[0], pos, "edge count");
    expect_line_end(lines[0], pos);
    if (n < 0 || m < 0) throw ParseError("edge list: negative header value");
    if (static_cast<long long>(lines.size()) != m + 1)
        throw ParseError("edge list: expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));

    std::vector<Triple> triples;
    triples.reserve(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        pos = 0;
        long long u = parse_int_token(lines[static_cast<size_t>(i)], pos, "vertex");
        long long v = parse_int_token(lines[static_cast<size_t>(i)], pos, "vertex");
        long long w = parse_int_token(lines[static_cast<size_t>(i)], pos, "vertex");
        expect_line_end(lines[static_cast<size_t>(i)], pos);
        if (!(0 <= u && u < v && v < w && w < n))
            throw ParseError("edge list: triple not canonical or out of range on line " +
                             std::to_string(i + 1));
        triples.push_back(Triple{static_cast<int>(u), static_cast<int>(v), static_cast<int>(w)});
    }
    try {
        return ThreeGraph::from_triples(static_cast<int>(n), triples);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

}  // namespace turan
