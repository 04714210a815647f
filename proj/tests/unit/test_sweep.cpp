#include <doctest.h>

#include <atomic>

#include "totdom/errors.hpp"
#include "totdom/generators.hpp"
#include "totdom/graph_io.hpp"
#include "totdom/sweep.hpp"

using namespace totdom;

TEST_CASE("claim names") {
    CHECK(to_string(Claim::lemma5) == "lemma5");
    CHECK(parse_claim("cor9") == Claim::cor9);
    CHECK_THROWS_AS(parse_claim("lemma99"), UsageError);
    CHECK(parse_claim_list("lemma5,prop7,cor9") == std::vector<Claim>{Claim::lemma5, Claim::prop7, Claim::cor9});
    CHECK(parse_claim_list("all").size() == all_claims().size());
    CHECK_THROWS_AS(parse_claim_list(""), UsageError);
}

TEST_CASE("sweep up to n = 5 finds no violations") {
    SweepOptions o;
    o.max_n = 5;
    o.jobs = 2;
    auto s = run_sweep(o);
    CHECK(s.graphs == 1 + 2 + 8 + 64 + 1024);
    CHECK(s.ok());
    CHECK(s.tallies.size() == all_claims().size());
    CHECK(s.tallies[Claim::thm1].checked > 0);
    CHECK(s.tallies[Claim::lemma5].checked == s.gamma2);
    CHECK(s.tallies[Claim::bounds].checked == s.isolate_free);
}

TEST_CASE("sweep results do not depend on the worker count") {
    SweepOptions o;
    o.max_n = 5;
    o.jobs = 1;
    auto one = run_sweep(o);
    o.jobs = 3;
    auto three = run_sweep(o);
    CHECK(sweep_json(one, o).dump() == sweep_json(three, o).dump());
}

TEST_CASE("a corrupted classifier is caught with the earliest counterexamples") {
    SweepOptions o;
    o.max_n = 4;
    o.claims = {Claim::thm1};
    o.jobs = 2;
    o.max_counterexamples = 2;
    o.classifier = [](const Graph& g) {
        auto r = classify_main(g);
        if (r.verdict == Verdict::is_gamma2) r.verdict = Verdict::not_gamma2;
        return r;
    };
    auto s = run_sweep(o);
    CHECK_FALSE(s.ok());
    const auto& t = s.tallies[Claim::thm1];
    CHECK(t.violations > 0);
    REQUIRE(t.counterexamples.size() == 2);
    // Sequence numbers start at K1; K2 is the third graph.
    CHECK(t.counterexamples[0].first == 2);
    CHECK(t.counterexamples[0].second == "A_");
    CHECK(t.counterexamples[0].first < t.counterexamples[1].first);
    auto j = sweep_json(s, o);
    CHECK(j["ok"] == false);
    CHECK(j["claims"]["thm1"]["counterexamples"][0] == "A_");
}

TEST_CASE("implied values are checked, not only the verdict") {
    SweepOptions o;
    o.max_n = 4;
    o.claims = {Claim::thm1};
    o.classifier = [](const Graph& g) {
        auto r = classify_main(g);
        if (r.implied_gamma) r.implied_gamma = *r.implied_gamma + 1;
        return r;
    };
    CHECK_FALSE(run_sweep(o).ok());
}

TEST_CASE("sweep over an explicit corpus") {
    std::vector<Graph> corpus = {fixture("g1"), fixture("g2"), fixture("c6"), corona_p2(fixture("c5")),
                                 random_tree(12, 1)};
    SweepOptions o;
    o.jobs = 2;
    auto s = run_sweep_on(corpus, o);
    CHECK(s.graphs == corpus.size());
    CHECK(s.ok());
    CHECK(s.gamma2 == 4);
    o.oracle_cap = 10;
    auto capped = run_sweep_on(corpus, o);
    CHECK(capped.skipped_over_cap == 3);
}

TEST_CASE("sweep refuses orders above the enumeration limit") {
    SweepOptions o;
    o.max_n = 8;
    CHECK_THROWS_AS(run_sweep(o), UsageError);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
    std::vector<std::atomic<int>> hits(500);
    parallel_for(hits.size(), 4, [&](std::size_t i, unsigned worker) {
        CHECK(worker < 4);
        ++hits[i];
    });
    for (auto& h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i, unsigned) {
                                     if (i == 7) throw UsageError("boom");
                                 }),
                    UsageError);
    CHECK(resolve_jobs(3) == 3);
    CHECK(resolve_jobs(0) >= 1);
}
