#include "turan/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace turan {

namespace {

void check_range(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
}

size_t checked_pair_rank(int u, int v, int n, const char* what) {
    if (u > v) std::swap(u, v);
    check_range(u, n, what);
    check_range(v, n, what);
    if (u == v) throw std::invalid_argument(std::string(what) + ": endpoints must be distinct");
    return static_cast<size_t>(pair_rank(u, v));
}

}  // namespace

Multigraph::Multigraph(int n, int cap) : n_(n), cap_(cap) {
    if (n < 0) throw std::invalid_argument("Multigraph: negative vertex count");
    if (cap < 0) throw std::invalid_argument("Multigraph: negative cap");
    weights_.assign(static_cast<size_t>(binom2(n)), 0);
}

int Multigraph::weight(int u, int v) const {
    return weights_[checked_pair_rank(u, v, n_, "weight")];
}

void Multigraph::set_weight(int u, int v, int w) {
    if (w < 0 || w > cap_)
        throw std::invalid_argument("set_weight: multiplicity " + std::to_string(w) +
                                    " outside [0," + std::to_string(cap_) + "]");
    weights_[checked_pair_rank(u, v, n_, "set_weight")] = w;
}

long long Multigraph::total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

long long Multigraph::weighted_incidence(std::span<const int> s) const {
    std::vector<char> in_s(static_cast<size_t>(n_), 0);
    for (int v : s) {
        check_range(v, n_, "weighted_incidence");
        in_s[static_cast<size_t>(v)] = 1;
    }
    long long sum = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (in_s[static_cast<size_t>(u)] || in_s[static_cast<size_t>(v)])
                sum += weights_[static_cast<size_t>(pair_rank(u, v))];
    return sum;
}

Multigraph::TripleSum Multigraph::max_triple_sum() const {
    if (n_ < 3) throw std::invalid_argument("max_triple_sum: needs n >= 3");
    TripleSum best{-1, Triple{0, 1, 2}};
    for (int w = 2; w < n_; ++w)
        for (int v = 1; v < w; ++v)
            for (int u = 0; u < v; ++u) {
                int s = weights_[static_cast<size_t>(pair_rank(u, v))] +
                        weights_[static_cast<size_t>(pair_rank(u, w))] +
                        weights_[static_cast<size_t>(pair_rank(v, w))];
                if (s > best.sum) best = TripleSum{s, Triple{u, v, w}};
            }
    return best;
}

bool Multigraph::is_isomorphic_to(const Multigraph& other) const {
    if (n_ != other.n_) return false;
    if (weights_.size() != other.weights_.size()) return false;

    std::vector<int> ws(weights_.begin(), weights_.end());
    std::vector<int> wo(other.weights_.begin(), other.weights_.end());
    std::sort(ws.begin(), ws.end());
    std::sort(wo.begin(), wo.end());
    if (ws != wo) return false;

    std::vector<long long> deg_a(static_cast<size_t>(n_), 0), deg_b(static_cast<size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            size_t r = static_cast<size_t>(pair_rank(u, v));
            deg_a[static_cast<size_t>(u)] += weights_[r];
            deg_a[static_cast<size_t>(v)] += weights_[r];
            deg_b[static_cast<size_t>(u)] += other.weights_[r];
            deg_b[static_cast<size_t>(v)] += other.weights_[r];
        }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Map vertices of *this onto other, checking pair weights incrementally.
    std::vector<int> image(static_cast<size_t>(n_), -1);
    std::vector<char> used(static_cast<size_t>(n_), 0);
    auto backtrack = [&](auto&& self, int next) -> bool {
        if (next == n_) return true;
        for (int cand = 0; cand < n_; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (deg_a[static_cast<size_t>(next)] != deg_b[static_cast<size_t>(cand)]) continue;
            bool ok = true;
            for (int prev = 0; prev < next && ok; ++prev)
                if (weight(prev, next) != other.weight(image[static_cast<size_t>(prev)], cand))
                    ok = false;
            if (!ok) continue;
            image[static_cast<size_t>(next)] = cand;
            used[static_cast<size_t>(cand)] = 1;
            if (self(self, next + 1)) return true;
            used[static_cast<size_t>(cand)] = 0;
            image[static_cast<size_t>(next)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

std::string to_multigraph_text(const Multigraph& m) {
    std::ostringstream out;
    out << m.vertex_count() << '\n';
    for (int u = 0; u < m.vertex_count(); ++u)
        for (int v = u + 1; v < m.vertex_count(); ++v)
            if (int w = m.weight(u, v); w != 0) out << u << ' ' << v << ' ' << w << '\n';
    return out.str();
}

Multigraph parse_multigraph_text(std::string_view text, int cap) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("multigraph: empty input");
    int n = 0;
    {
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), n);
        if (ec != std::errc() || ptr != line.data() + line.size() || n < 0)
            throw ParseError("multigraph: bad vertex count line");
    }
    Multigraph m(n, cap);
    long long last_rank_lex = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v, w;
        if (!(ls >> u >> v >> w)) throw ParseError("multigraph: bad pair line");
        std::string rest;
        if (ls >> rest) throw ParseError("multigraph: trailing characters on pair line");
        if (!(0 <= u && u < v && v < n)) throw ParseError("multigraph: pair not canonical");
        if (w <= 0 || w > cap) throw ParseError("multigraph: weight out of range");
        long long lex = static_cast<long long>(u) * n + v;
        if (lex <= last_rank_lex) throw ParseError("multigraph: pairs not in ascending order");
        last_rank_lex = lex;
        m.set_weight(u, v, w);
    }
    return m;
}

ColoredMultigraph::ColoredMultigraph(int n, std::vector<int> apexes)
    : n_(n), apexes_(std::move(apexes)) {
    if (n < 0) throw std::invalid_argument("ColoredMultigraph: negative vertex count");
    if (apexes_.size() > 8)
        throw std::invalid_argument("ColoredMultigraph: more than 8 apexes unsupported");
    masks_.assign(static_cast<size_t>(binom2(n)), 0);
}

int ColoredMultigraph::multiplicity(int u, int v) const {
    return std::popcount(static_cast<unsigned>(masks_[checked_pair_rank(u, v, n_, "multiplicity")]));
}

std::uint8_t ColoredMultigraph::color_mask(int u, int v) const {
    return masks_[checked_pair_rank(u, v, n_, "color_mask")];
}

void ColoredMultigraph::add_color(int u, int v, int apex_index) {
    if (apex_index < 0 || apex_index >= static_cast<int>(apexes_.size()))
        throw std::invalid_argument("add_color: apex index out of range");
    masks_[checked_pair_rank(u, v, n_, "add_color")] |=
        static_cast<std::uint8_t>(1u << apex_index);
}

std::vector<int> ColoredMultigraph::colors(int u, int v) const {
    std::uint8_t mask = color_mask(u, v);
    std::vector<int> out;
    for (size_t i = 0; i < apexes_.size(); ++i)
        if (mask & (1u << i)) out.push_back(apexes_[i]);
    return out;
}

long long ColoredMultigraph::total_multiplicity() const {
    long long sum = 0;
    for (std::uint8_t m : masks_) sum += std::popcount(static_cast<unsigned>(m));
    return sum;
}

Multigraph ColoredMultigraph::to_multigraph() const {
    int cap = std::max(4, static_cast<int>(apexes_.size()));
    Multigraph m(n_, cap);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            m.set_weight(u, v, multiplicity(u, v));
    return m;
}

ColoredMultigraph build_link(const ThreeGraph& g, std::span<const int> s) {
    std::vector<int> apexes(s.begin(), s.end());
    std::sort(apexes.begin(), apexes.end());
    apexes.erase(std::unique(apexes.begin(), apexes.end()), apexes.end());
    if (apexes.empty()) throw std::invalid_argument("build_link: S must be nonempty");
    for (int a : apexes) check_range(a, g.vertex_count(), "build_link");

    std::vector<int> rest;  // X = V minus S, original labels in ascending order
    {
        std::vector<char> in_s(static_cast<size_t>(g.vertex_count()), 0);
        for (int a : apexes) in_s[static_cast<size_t>(a)] = 1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_s[static_cast<size_t>(v)]) rest.push_back(v);
    }

    ColoredMultigraph link(static_cast<int>(rest.size()), apexes);
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
            for (size_t ai = 0; ai < apexes.size(); ++ai)
                if (g.has_edge(apexes[ai], rest[i], rest[j]))
                    link.add_color(static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(ai));
    return link;
}

std::optional<ColorTriangle> find_common_color_triangle(const ColoredMultigraph& c, int k) {
    if (k < 1) throw std::invalid_argument("find_common_color_triangle: k must be >= 1");
    const int n = c.vertex_count();
    // Support graph is tiny at verification scale; scan triples directly.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint8_t muv = c.color_mask(u, v);
            if (std::popcount(static_cast<unsigned>(muv)) < k) continue;
            for (int w = v + 1; w < n; ++w) {
                std::uint8_t common = static_cast<std::uint8_t>(muv & c.color_mask(u, w) &
                                                                c.color_mask(v, w));
                if (std::popcount(static_cast<unsigned>(common)) < k) continue;
                ColorTriangle out;
                out.triangle = Triple{u, v, w};
                for (size_t i = 0; i < c.apexes().size() &&
                                   static_cast<int>(out.colors.size()) < k; ++i)
                    if (common & (1u << i)) out.colors.push_back(c.apexes()[i]);
                return out;
            }
        }
    return std::nullopt;
}

PairGraph high_multiplicity_graph(const ColoredMultigraph& c, int threshold) {
    if (threshold < 0) throw std::invalid_argument("high_multiplicity_graph: negative threshold");
    PairGraph j(c.vertex_count());
    for (int u = 0; u < c.vertex_count(); ++u)
        for (int v = u + 1; v < c.vertex_count(); ++v)
            if (c.multiplicity(u, v) >= threshold) j.add_pair(u, v);
    return j;
}

std::string to_link_json_text(const ColoredMultigraph& c) {
    std::ostringstream out;
    auto int_list = [&](const std::vector<int>& xs) {
        out << '[';
        for (size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
        out << ']';
    };
    out << "{\"n\":" << c.vertex_count() << ",\"apexes\":";
    int_list(c.apexes());
    out << ",\"pairs\":[";
    bool first = true;
    for (int u = 0; u < c.vertex_count(); ++u)
        for (int v = u + 1; v < c.vertex_count(); ++v) {
            if (c.multiplicity(u, v) == 0) continue;
            if (!first) out << ',';
            first = false;
            out << "{\"u\":" << u << ",\"v\":" << v << ",\"colors\":";
            int_list(c.colors(u, v));
            out << '}';
        }
    out << "]}";
    return out.str();
}

int clique_number(const PairGraph& p) {
    const int n = p.vertex_count();
    if (n == 0) return 0;
    std::vector<Bits> row(static_cast<size_t>(n), Bits(static_cast<size_t>(n)));
    std::vector<Bits> above(static_cast<size_t>(n), Bits(static_cast<size_t>(n)));
    for (auto [u, v] : p.pairs()) {
        row[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        row[static_cast<size_t>(v)].set(static_cast<size_t>(u));
    }
    for (int v = 0; v < n; ++v)
        for (int z = v + 1; z < n; ++z) above[static_cast<size_t>(v)].set(static_cast<size_t>(z));

    int best = 0;
    auto extend = [&](auto&& self, int depth, const Bits& cand) -> void {
        best = std::max(best, depth);
        if (depth + static_cast<int>(cand.count()) <= best) return;
        for (size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v))
            self(self, depth + 1, cand & row[v] & above[v]);
    };
    Bits all(static_cast<size_t>(n));
    all.set();
    extend(extend, 0, all);
    return best;
}

}  // namespace turan
