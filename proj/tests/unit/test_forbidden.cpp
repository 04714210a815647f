#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "totdom/errors.hpp"
#include "totdom/forbidden.hpp"
#include "totdom/generators.hpp"

using namespace totdom;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

bool contains(const Graph& host, const Pattern& p) { return find_induced(host, p.graph).has_value(); }

}  // namespace

TEST_CASE("pattern shapes") {
    CHECK(degree_sequence(pattern_h1().graph) == std::vector<int>{2, 2, 2, 2, 3, 3});
    CHECK(degree_sequence(pattern_h2().graph) == std::vector<int>{2, 2, 3, 3, 3, 3});
    CHECK(degree_sequence(pattern_c6().graph) == std::vector<int>(6, 2));
    CHECK(pattern_c3().graph.edge_count() == 3);
    CHECK(named_pattern("H2").name == "h2");
    CHECK_THROWS_AS(named_pattern("c7"), UsageError);
    auto list = parse_pattern_list("c3,h1");
    REQUIRE(list.size() == 2);
    CHECK(list[1].name == "h1");
    CHECK(main_theorem_patterns().size() == 3);
}

TEST_CASE("pattern facts of the worked examples") {
    Graph g1 = fixture("g1");
    CHECK(contains(g1, pattern_h1()));
    CHECK_FALSE(contains(g1, pattern_h2()));
    CHECK_FALSE(contains(g1, pattern_c6()));
    Graph g2 = fixture("g2");
    CHECK(contains(g2, pattern_h2()));
    CHECK_FALSE(contains(g2, pattern_h1()));
    CHECK_FALSE(contains(g2, pattern_c6()));
    Graph c6 = fixture("c6");
    CHECK(contains(c6, pattern_c6()));
    CHECK_FALSE(contains(c6, pattern_h1()));
    CHECK_FALSE(contains(c6, pattern_h2()));
}

TEST_CASE("witness embeddings are induced copies") {
    Graph g2 = fixture("g2");
    auto r = is_free(g2, parse_pattern_list("h1,h2,c6"));
    CHECK_FALSE(r.free);
    CHECK(r.pattern == "h2");
    Graph h2 = pattern_h2().graph;
    REQUIRE(r.witness.size() == 6);
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = a + 1; b < 6; ++b)
            CHECK(h2.adjacent(a, b) == g2.adjacent(r.witness[static_cast<std::size_t>(a)],
                                                   r.witness[static_cast<std::size_t>(b)]));
}

TEST_CASE("freeness of trivial classes") {
    auto patterns = main_theorem_patterns();
    CHECK(is_free(fixture("p6"), patterns).free);
    CHECK(is_free(random_tree(15, 3), patterns).free);
    CHECK(is_free(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}), patterns).free);
    CHECK(is_free(Graph(0), patterns).free);
    CHECK_FALSE(is_free(fixture("c6"), patterns).free);
    CHECK(find_induced(fixture("k4"), pattern_c3().graph) == Embedding{0, 1, 2});
    CHECK_FALSE(find_induced(fixture("c3"), fixture("k4")));
}

TEST_CASE("chordality") {
    CHECK(is_chordal(fixture("k4")));
    CHECK(is_chordal(fixture("p5")));
    CHECK(is_chordal(fixture("fig1")) == false);
    CHECK_FALSE(is_chordal(fixture("c4")));
    CHECK(is_chordal(Graph(0)));
    Graph fan(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(is_chordal(fan));
    auto order = lex_bfs_order(fan);
    CHECK(order.size() == 5);
    CHECK(order.front() == 0);
}

TEST_CASE("girth") {
    CHECK_FALSE(girth(fixture("p5")).has_value());
    CHECK(*girth(fixture("c3")) == 3);
    CHECK(*girth(fixture("c6")) == 6);
    CHECK(*girth(fixture("g2")) == 3);
    CHECK(*girth(corona_p2(fixture("c8"))) == 8);
    Graph theta(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 3}});
    CHECK(*girth(theta) == 5);
}

TEST_CASE("property: induced search agrees with the injective-map oracle") {
    std::vector<Pattern> patterns = {pattern_c3(), pattern_c6(), pattern_h1(), pattern_h2(),
                                     {"p4", fixture("p4")}, {"c4", fixture("c4")}, {"k1", Graph(1)}};
    for (int n = 1; n <= 6; ++n) {
        SmallGraphEnumerator e(n, SmallGraphFilter::all);
        while (auto g = e.next())
            for (const auto& p : patterns)
                REQUIRE(contains(*g, p) == oracle::has_induced(*g, p.graph));
    }
    // Sampled hosts of order 7 and 8; small_graph_from_mask takes any mask below 2^(n(n-1)/2).
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 120; ++i) {
        const int n = 7 + i % 2;
        const std::uint64_t mask = rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
        Graph g = small_graph_from_mask(n, mask);
        for (const auto& p : patterns) REQUIRE(contains(g, p) == oracle::has_induced(g, p.graph));
    }
}

TEST_CASE("property: chordality agrees with the chordless-cycle oracle") {
    for (int n = 1; n <= 6; ++n) {
        SmallGraphEnumerator e(n, SmallGraphFilter::all);
        while (auto g = e.next()) REQUIRE(is_chordal(*g) == oracle::is_chordal(*g));
    }
}

TEST_CASE("property: chordal graphs are (H1, H2, C6)-free") {
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t stride = n == 7 ? 97 : 1;
        for (std::uint64_t mask = 0; mask < SmallGraphEnumerator::mask_count(n); mask += stride) {
            Graph g = small_graph_from_mask(n, mask);
            if (is_chordal(g)) REQUIRE(is_free(g, main_theorem_patterns()).free);
        }
    }
}
