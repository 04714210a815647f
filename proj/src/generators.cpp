#include "totdom/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <random>

#include "totdom/errors.hpp"
#include "totdom/forbidden.hpp"

namespace totdom {

Graph corona_p2(const Graph& h) {
    ConstructionSpec spec{h, std::vector<Graph>(static_cast<std::size_t>(h.order()), Graph(1))};
    return construction_h(spec);
}

Graph construction_h(const ConstructionSpec& spec) {
    const int n = spec.base.order();
    if (spec.attachments.size() != static_cast<std::size_t>(n))
        throw UsageError("construction needs one attachment per base vertex: got " +
                         std::to_string(spec.attachments.size()) + " for " + std::to_string(n));
    std::vector<Edge> edges = spec.base.edges();
    int next = 2 * n;
    for (Vertex i = 0; i < n; ++i) {
        const Vertex hub = n + i;
        edges.emplace_back(i, hub);
        const Graph& att = spec.attachments[static_cast<std::size_t>(i)];
        for (Vertex w = 0; w < att.order(); ++w) edges.emplace_back(hub, next + w);
        for (auto [a, b] : att.edges()) edges.emplace_back(next + a, next + b);
        next += att.order();
    }
    return Graph(next, edges);
}

namespace {

Graph fig1() {
    return Graph(8,
                 {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                  {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 6}, {5, 7}, {6, 7}},
                 {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"});
}

// H1 with a pendant at v, the hexagon vertex adjacent to both chord endpoints.
Graph g1() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 5}, {0, 6}},
                 {"v", "a", "b", "c", "d", "e", "p"});
}

// Induced H2 on v1,a,b,c,d,e; triangle c,f,g; square f,g,h,i; triangle h,i,v2;
// pendants p1 at v1 and p2 at v2.
Graph g2() {
    return Graph(13,
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 6}, {3, 5},
                  {4, 7}, {7, 8}, {4, 8}, {7, 10}, {9, 10}, {8, 9}, {9, 11}, {11, 12}, {10, 11}},
                 {"p1", "v1", "a", "b", "c", "d", "e", "f", "g", "h", "i", "v2", "p2"});
}

Graph cycle(int k) {
    if (k < 3) throw UsageError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph path(int k) {
    if (k < 1) throw UsageError("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

Graph star(int k) {
    if (k < 1) throw UsageError("star needs at least 1 leaf");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, edges);
}

Graph complete(int k) {
    if (k < 1) throw UsageError("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex j = 1; j < k; ++j)
        for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(k, edges);
}

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    auto digits = name.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    if (value > 100000) throw UsageError("fixture size too large: " + std::string(name));
    return value;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

Graph fixture(std::string_view raw) {
    std::string name(raw);
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "fig1") return fig1();
    if (name == "h1") return pattern_h1().graph;
    if (name == "h2") return pattern_h2().graph;
    if (name == "g1") return g1();
    if (name == "g2") return g2();
    if (auto k = suffix_number(name, "star")) return star(*k);
    if (auto k = suffix_number(name, "complete")) return complete(*k);
    if (auto k = suffix_number(name, "empty")) return Graph(*k);
    if (auto k = suffix_number(name, "c")) return cycle(*k);
    if (auto k = suffix_number(name, "p")) return path(*k);
    if (auto k = suffix_number(name, "k")) return complete(*k);
    throw UsageError("unknown fixture '" + std::string(raw) + "'");
}

std::vector<std::string> fixture_names() {
    return {"fig1", "h1", "h2", "g1", "g2", "c<k>", "p<k>", "star<k>", "complete<k>", "k<k>", "empty<k>"};
}

SmallGraphFilter parse_small_graph_filter(std::string_view name) {
    if (name == "all") return SmallGraphFilter::all;
    if (name == "isolate_free" || name == "isolate-free") return SmallGraphFilter::isolate_free;
    if (name == "connected") return SmallGraphFilter::connected;
    throw UsageError("unknown filter '" + std::string(name) + "' (expected all, isolate_free or connected)");
}

Graph small_graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::uint64_t SmallGraphEnumerator::mask_count(int n) {
    if (n < 0 || n > kMaxEnumerationOrder)
        throw UsageError("built-in enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                         "; feed larger corpora as a graph6 stream with --input");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

SmallGraphEnumerator::SmallGraphEnumerator(int n, SmallGraphFilter filter)
    : n_(n), filter_(filter), end_(mask_count(n)) {}

bool passes_filter(const Graph& g, SmallGraphFilter filter) {
    switch (filter) {
        case SmallGraphFilter::all: return true;
        case SmallGraphFilter::isolate_free: return !has_isolated_vertex(g);
        case SmallGraphFilter::connected: return is_connected(g);
    }
    return true;
}

std::optional<Graph> SmallGraphEnumerator::next() {
    while (mask_ < end_) {
        Graph g = small_graph_from_mask(n_, mask_++);
        if (passes_filter(g, filter_)) return g;
    }
    return std::nullopt;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw UsageError("random_tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));

    std::vector<int> remaining(static_cast<std::size_t>(n), 1);
    for (Vertex c : code) ++remaining[static_cast<std::size_t>(c)];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);

    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--remaining[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph(n, edges);
}

Graph random_block_graph(int blocks, int max_clique, std::uint64_t seed) {
    if (blocks < 2 || max_clique < 2) throw UsageError("random_block_graph needs blocks >= 2 and max_clique >= 2");
    std::mt19937_64 rng(seed);
    auto clique_size = [&] {
        return 2 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_clique - 1)));
    };
    std::vector<Edge> edges;
    auto add_clique = [&](std::vector<Vertex> members) {
        for (std::size_t j = 1; j < members.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) edges.emplace_back(members[i], members[j]);
    };

    int n = clique_size();
    std::vector<Vertex> first(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) first[static_cast<std::size_t>(v)] = v;
    add_clique(first);

    for (int b = 1; b < blocks; ++b) {
        Vertex anchor = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));
        int size = clique_size();
        std::vector<Vertex> members{anchor};
        for (int i = 1; i < size; ++i) members.push_back(n++);
        add_clique(members);
    }
    return Graph(n, edges);
}

}  // namespace totdom
