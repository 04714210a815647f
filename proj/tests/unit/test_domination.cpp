#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "totdom/domination.hpp"
#include "totdom/errors.hpp"
#include "totdom/generators.hpp"

using namespace totdom;
using testing_helpers::by_label;
using testing_helpers::ids;

TEST_CASE("dominating, total dominating and packing predicates") {
    Graph p4 = fixture("p4");
    CHECK(is_dominating(p4, ids(4, {1, 2})));
    CHECK(is_dominating(p4, ids(4, {0, 3})));
    CHECK_FALSE(is_dominating(p4, ids(4, {0})));
    CHECK(first_undominated(p4, ids(4, {0})) == 2);
    CHECK(first_undominated(p4, ids(4, {1, 3})) == -1);
    CHECK(is_total_dominating(p4, ids(4, {1, 2})));
    CHECK_FALSE(is_total_dominating(p4, ids(4, {0, 3})));
    CHECK(is_packing(p4, ids(4, {0, 3})).ok);
    auto bad = is_packing(p4, ids(4, {0, 2}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation == Edge{0, 2});
    CHECK(is_packing(p4, ids(4, {})).ok);
    CHECK_THROWS_AS(is_dominating(p4, ids(3, {0})), UsageError);
}

TEST_CASE("exact values of the worked examples") {
    struct Case {
        const char* name;
        int gamma;
        int gamma_t;
    };
    for (auto [name, gamma, gamma_t] : {Case{"c6", 2, 4}, Case{"g1", 2, 4}, Case{"g2", 3, 6}, Case{"fig1", 2, 3},
                                        Case{"p4", 2, 2}, Case{"k3", 1, 2}, Case{"p6", 2, 4}}) {
        CAPTURE(name);
        Graph g = fixture(name);
        auto c = exact_gamma(g);
        CHECK(c.value == gamma);
        CHECK(c.witness.size() == gamma);
        CHECK(is_dominating(g, c.witness));
        auto t = exact_gamma_total(g);
        CHECK(t.value == gamma_t);
        CHECK(is_total_dominating(g, t.witness));
        CHECK(t.kind == DominationKind::gamma_total);
    }
}

TEST_CASE("witnesses are the first found in ascending branch order") {
    CHECK(exact_gamma(fixture("c6")).witness == ids(6, {0, 3}));
    Graph g1 = fixture("g1");
    CHECK(exact_gamma(g1).witness == ids(7, {0, 3}));
    Graph g2 = fixture("g2");
    CHECK(exact_gamma(g2).witness == by_label(g2, {"v1", "c", "v2"}));
}

TEST_CASE("corona values") {
    Graph c3 = corona_p2(fixture("c3"));
    CHECK(c3.order() == 9);
    CHECK(exact_gamma(c3).value == 3);
    CHECK(exact_gamma_total(c3).value == 6);
    Graph c4 = corona_p2(fixture("c4"));
    CHECK(exact_gamma(c4).value == 4);
    CHECK(exact_gamma_total(c4).value == 8);
}

TEST_CASE("edge cases and errors") {
    CHECK(exact_gamma(Graph(0)).value == 0);
    CHECK(exact_gamma(Graph(4)).value == 4);
    CHECK(exact_gamma_total(Graph(0)).value == 0);
    try {
        exact_gamma_total(Graph(3, {{0, 1}}));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.vertex() == 2);
    }
    CHECK_THROWS_AS(exact_gamma(fixture("p40")), OracleCapError);
    CHECK(exact_gamma(fixture("p40"), 40).value == 14);
    CHECK_THROWS_AS(exact_gamma(fixture("p5"), 65), UsageError);
    CHECK_NOTHROW(require_oracle_capacity(fixture("p5"), 5));
    CHECK_THROWS_AS(require_oracle_capacity(fixture("p5"), 4), OracleCapError);
}

TEST_CASE("gamma-set enumeration") {
    auto c6 = enumerate_gamma_sets(fixture("c6"));
    CHECK(c6.gamma == 2);
    CHECK(c6.count == 3);
    REQUIRE(c6.sets.size() == 3);
    CHECK(c6.sets[0] == ids(6, {0, 3}));
    CHECK(c6.sets[2] == ids(6, {2, 5}));
    CHECK(enumerate_gamma_sets(fixture("fig1")).count == 7);
    CHECK(enumerate_gamma_sets(fixture("g1")).count == 1);
    CHECK(enumerate_gamma_sets(fixture("g2")).count == 1);
    auto capped = enumerate_gamma_sets(fixture("k3"), 1);
    CHECK(capped.count == 3);
    CHECK(capped.sets.size() == 1);
    CHECK(enumerate_gamma_sets(Graph(0)).count == 1);
}

TEST_CASE("gamma2 decision") {
    CHECK(is_gamma2_graph_exact(fixture("c6")));
    CHECK(is_gamma2_graph_exact(fixture("g2")));
    CHECK_FALSE(is_gamma2_graph_exact(fixture("fig1")));
    CHECK_FALSE(is_gamma2_graph_exact(fixture("p4")));
}

TEST_CASE("property: exact solvers agree with full-subset enumeration for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        SmallGraphEnumerator e(n, SmallGraphFilter::all);
        while (auto g = e.next()) {
            REQUIRE(exact_gamma(*g).value == *oracle::min_dominating(*g, false));
            REQUIRE(enumerate_gamma_sets(*g, 0).count == oracle::count_min_dominating(*g));
            if (!has_isolated_vertex(*g)) REQUIRE(exact_gamma_total(*g).value == *oracle::min_dominating(*g, true));
        }
    }
}

TEST_CASE("property: exact solvers agree with full-subset enumeration on sampled n = 6, 7") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        const int n = 6 + i % 2;
        const std::uint64_t mask = rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
        Graph g = small_graph_from_mask(n, mask);
        REQUIRE(exact_gamma(g).value == *oracle::min_dominating(g, false));
        if (!has_isolated_vertex(g)) REQUIRE(exact_gamma_total(g).value == *oracle::min_dominating(g, true));
    }
}
