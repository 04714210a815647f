#include "totdom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "totdom/errors.hpp"
#include "totdom/generators.hpp"
#include "totdom/graph_io.hpp"

namespace totdom {

namespace {

constexpr std::pair<Claim, std::string_view> kClaimNames[] = {
    {Claim::thm1, "thm1"},     {Claim::lemma5, "lemma5"}, {Claim::lemma6, "lemma6"}, {Claim::prop7, "prop7"},
    {Claim::cor2, "cor2"},     {Claim::cor4, "cor4"},     {Claim::cor9, "cor9"},     {Claim::bounds, "bounds"},
    {Claim::thm3, "thm3"},     {Claim::thm10, "thm10"},   {Claim::thm11, "thm11"},   {Claim::corona, "corona"},
};

using Mask = std::uint64_t;

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        Mask m = Mask{1} << v;
        for (Vertex u : g.neighbor_list(v)) m |= Mask{1} << u;
        out[static_cast<std::size_t>(v)] = m;
    }
    return out;
}

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << v;
    return m;
}

// Every packing that is also a dominating set, found by growing packings in
// ascending id order. Independent of the gamma-set enumeration.
std::vector<Mask> packing_dominating_sets(const Graph& g) {
    const auto closed = closed_masks(g);
    const int n = g.order();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> out;
    auto grow = [&](auto&& self, Vertex from, Mask chosen, Mask covered) -> void {
        if (covered == all) out.push_back(chosen);
        for (Vertex v = from; v < n; ++v) {
            Mask hood = closed[static_cast<std::size_t>(v)];
            if (hood & covered) continue;
            self(self, v + 1, chosen | (Mask{1} << v), covered | hood);
        }
    };
    grow(grow, 0, 0, 0);
    return out;
}

bool is_packing_mask(const std::vector<Mask>& closed, Mask s) {
    Mask seen = 0;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        if (closed[static_cast<std::size_t>(v)] & seen) return false;
        seen |= closed[static_cast<std::size_t>(v)];
    }
    return true;
}

}  // namespace

std::string_view to_string(Claim c) {
    for (auto [claim, name] : kClaimNames)
        if (claim == c) return name;
    return "?";
}

Claim parse_claim(std::string_view name) {
    for (auto [claim, n] : kClaimNames)
        if (n == name) return claim;
    throw UsageError("unknown claim '" + std::string(name) + "'");
}

std::vector<Claim> all_claims() {
    std::vector<Claim> out;
    for (auto [claim, name] : kClaimNames) out.push_back(claim);
    return out;
}

std::vector<Claim> parse_claim_list(std::string_view list) {
    if (list == "all") return all_claims();
    std::vector<Claim> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find(',', start);
        if (end == std::string_view::npos) end = list.size();
        auto item = list.substr(start, end - start);
        if (!item.empty()) out.push_back(parse_claim(item));
        start = end + 1;
    }
    if (out.empty()) throw UsageError("empty claim list");
    return out;
}

bool SweepSummary::ok() const { return total_violations() == 0; }

std::uint64_t SweepSummary::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& [claim, tally] : tallies) total += tally.violations;
    return total;
}

void SweepSummary::merge(const SweepSummary& other, std::size_t max_counterexamples) {
    graphs += other.graphs;
    isolate_free += other.isolate_free;
    eligible += other.eligible;
    gamma2 += other.gamma2;
    skipped_over_cap += other.skipped_over_cap;
    for (const auto& [claim, tally] : other.tallies) {
        auto& mine = tallies[claim];
        mine.checked += tally.checked;
        mine.violations += tally.violations;
        mine.counterexamples.insert(mine.counterexamples.end(), tally.counterexamples.begin(),
                                    tally.counterexamples.end());
        std::sort(mine.counterexamples.begin(), mine.counterexamples.end());
        if (mine.counterexamples.size() > max_counterexamples) mine.counterexamples.resize(max_counterexamples);
    }
}

SweepChecker::SweepChecker(SweepOptions options) : options_(std::move(options)) {
    if (!options_.classifier) options_.classifier = [](const Graph& g) { return classify_main(g); };
    wanted_.assign(std::size(kClaimNames), false);
    for (Claim c : options_.claims) wanted_[static_cast<std::size_t>(c)] = true;
}

bool SweepChecker::wants(Claim c) const { return wanted_[static_cast<std::size_t>(c)]; }

void SweepChecker::record(SweepSummary& s, Claim c, bool holds, const Graph& g, std::uint64_t sequence) const {
    auto& tally = s.tallies[c];
    ++tally.checked;
    if (holds) return;
    ++tally.violations;
    if (tally.counterexamples.size() < options_.max_counterexamples)
        tally.counterexamples.emplace_back(sequence, to_graph6(g));
}

void SweepChecker::check(const Graph& g, std::uint64_t seq, SweepSummary& s) const {
    for (Claim c : options_.claims) s.tallies.try_emplace(c);
    ++s.graphs;
    if (g.order() > options_.oracle_cap) {
        ++s.skipped_over_cap;
        return;
    }

    const auto freeness = is_free(g, main_theorem_patterns());
    const bool eligible = freeness.free;
    if (wants(Claim::cor2) && is_chordal(g)) record(s, Claim::cor2, eligible, g, seq);
    if (has_isolated_vertex(g)) return;
    ++s.isolate_free;
    if (eligible) ++s.eligible;

    const int n = g.order();
    const auto gamma_cert = exact_gamma(g, options_.oracle_cap);
    const int gamma = gamma_cert.value;
    const int gamma_t = exact_gamma_total(g, options_.oracle_cap).value;
    const bool gamma2 = gamma_t == 2 * gamma;
    if (gamma2) ++s.gamma2;
    const bool connected = is_connected(g);

    if (wants(Claim::bounds)) {
        bool holds = gamma <= gamma_t && gamma_t <= 2 * gamma;
        if (connected && n >= 3) holds = holds && 3 * gamma_t <= 2 * n;
        record(s, Claim::bounds, holds, g, seq);
    }

    const SGSet sg = s_set(g);
    const bool packing = is_packing(g, sg.representatives).ok;
    const bool dominating = is_dominating(g, sg.representatives);
    const bool pd = packing && dominating;

    if (wants(Claim::lemma6) && pd) record(s, Claim::lemma6, gamma2, g, seq);
    if (wants(Claim::prop7) && eligible && gamma2) record(s, Claim::prop7, pd, g, seq);

    if (wants(Claim::thm1) && eligible) {
        auto r = options_.classifier(g);
        bool holds = r.verdict == (gamma2 ? Verdict::is_gamma2 : Verdict::not_gamma2);
        if (holds && r.verdict == Verdict::is_gamma2)
            holds = r.implied_gamma == gamma && r.implied_gamma_t == gamma_t;
        record(s, Claim::thm1, holds, g, seq);
    }

    std::optional<GammaSetEnumeration> gamma_sets;
    auto enumeration = [&]() -> const GammaSetEnumeration& {
        if (!gamma_sets) gamma_sets = enumerate_gamma_sets(g, SIZE_MAX, options_.oracle_cap);
        return *gamma_sets;
    };

    if (wants(Claim::lemma5) && gamma2) {
        const auto closed = closed_masks(g);
        const auto& all_gamma_sets = enumeration();
        bool holds = true;
        for (const auto& set : all_gamma_sets.sets) holds = holds && is_packing_mask(closed, to_mask(set));
        const auto pds = packing_dominating_sets(g);
        for (Mask m : pds) holds = holds && std::popcount(m) == gamma;
        holds = holds && pds.size() == all_gamma_sets.count;
        record(s, Claim::lemma5, holds, g, seq);
    }

    if (wants(Claim::cor9) && eligible && gamma2) {
        const auto& all_gamma_sets = enumeration();
        auto product = twin_class_product(sg);
        bool singletons = std::all_of(sg.classes.begin(), sg.classes.end(),
                                      [](const VertexSet& c) { return c.size() == 1; });
        bool holds = product && *product == all_gamma_sets.count && ((all_gamma_sets.count == 1) == singletons);
        record(s, Claim::cor9, holds, g, seq);
    }

    if (wants(Claim::cor4) && gamma2 && basic_stats(g).min_degree >= 2) {
        auto len = girth(g);
        bool holds = len && *len <= 6 &&
                     (find_induced(g, pattern_c3().graph) || find_induced(g, pattern_c6().graph));
        record(s, Claim::cor4, holds, g, seq);
    }

    if (wants(Claim::thm3) && !find_induced(g, pattern_c3().graph) && !find_induced(g, pattern_c6().graph)) {
        // A K2 component has two special twins; sup(G) keeps its smaller end.
        const bool singletons = std::all_of(sg.classes.begin(), sg.classes.end(), [&](const VertexSet& c) {
            return c.size() == 1 || (c.size() == 2 && g.degree(c.first()) == 1);
        });
        auto r = classify_c3c6_free(g);
        bool holds = sg.representatives == support_vertices(g) && singletons &&
                     r.verdict == (gamma2 ? Verdict::is_gamma2 : Verdict::not_gamma2);
        record(s, Claim::thm3, holds, g, seq);
    }

    if (wants(Claim::thm10) && n >= 2 && is_tree(g)) {
        auto tree = classify_tree(g);
        auto main = options_.classifier(g);
        auto expected = gamma2 ? Verdict::is_gamma2 : Verdict::not_gamma2;
        record(s, Claim::thm10, tree.verdict == expected && main.verdict == expected, g, seq);
    }

    if (wants(Claim::thm11) && connected) {
        auto blocks = blocks_and_cut_vertices(g);
        if (blocks.blocks.size() >= 2 && is_block_graph(g, blocks)) {
            auto r = classify_block_graph(g);
            auto expected = gamma2 ? Verdict::is_gamma2 : Verdict::not_gamma2;
            bool holds = (blocks.d1 | blocks.d2) == sg.special && r.verdict == expected;
            record(s, Claim::thm11, holds, g, seq);
        }
    }

    if (wants(Claim::corona) && connected && n >= 2 && n <= 5) {
        const Graph c = corona_p2(g);
        const int order = c.order();
        const int ct = exact_gamma_total(c, options_.oracle_cap).value;
        const int cg = exact_gamma(c, options_.oracle_cap).value;
        VertexSet hubs(order);
        for (Vertex i = n; i < 2 * n; ++i) hubs.insert(i);
        const SGSet csg = s_set(c);
        bool holds = 3 * ct == 2 * order && ct == 2 * cg && csg.special == hubs &&
                     is_packing(c, csg.representatives).ok && is_dominating(c, csg.representatives);
        record(s, Claim::corona, holds, g, seq);
    }
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t, unsigned)>& fn) {
    jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i, w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

SweepSummary run_sweep(const SweepOptions& options) {
    if (options.max_n > kMaxEnumerationOrder)
        throw UsageError("sweep enumerates labelled graphs up to n = " + std::to_string(kMaxEnumerationOrder) +
                         "; use --input for larger corpora");
    SweepChecker checker(options);

    constexpr std::uint64_t kChunk = 4096;
    struct Unit {
        int n;
        std::uint64_t begin;
        std::uint64_t end;
        std::uint64_t base;  // sequence number of mask `begin`
    };
    std::vector<Unit> units;
    std::uint64_t sequence = 0;
    for (int n = std::max(options.min_n, 0); n <= options.max_n; ++n) {
        const std::uint64_t total = SmallGraphEnumerator::mask_count(n);
        for (std::uint64_t b = 0; b < total; b += kChunk) {
            units.push_back({n, b, std::min(total, b + kChunk), sequence + b});
        }
        sequence += total;
    }

    const unsigned jobs = resolve_jobs(options.jobs);
    std::vector<SweepSummary> partial(jobs);
    parallel_for(units.size(), jobs, [&](std::size_t i, unsigned worker) {
        const Unit& u = units[i];
        for (std::uint64_t m = u.begin; m < u.end; ++m)
            checker.check(small_graph_from_mask(u.n, m), u.base + (m - u.begin), partial[worker]);
    });

    SweepSummary total;
    for (Claim c : options.claims) total.tallies.try_emplace(c);
    for (const auto& p : partial) total.merge(p, options.max_counterexamples);
    return total;
}

SweepSummary run_sweep_on(std::span<const Graph> graphs, const SweepOptions& options) {
    SweepChecker checker(options);
    const unsigned jobs = resolve_jobs(options.jobs);
    std::vector<SweepSummary> partial(jobs);
    parallel_for(graphs.size(), jobs,
                 [&](std::size_t i, unsigned worker) { checker.check(graphs[i], i, partial[worker]); });
    SweepSummary total;
    for (Claim c : options.claims) total.tallies.try_emplace(c);
    for (const auto& p : partial) total.merge(p, options.max_counterexamples);
    return total;
}

Json sweep_json(const SweepSummary& s, const SweepOptions& options) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["minN"] = options.min_n;
    j["maxN"] = options.max_n;
    j["graphsChecked"] = s.graphs;
    j["isolateFree"] = s.isolate_free;
    j["eligible"] = s.eligible;
    j["gamma2"] = s.gamma2;
    j["skippedOverCap"] = s.skipped_over_cap;
    Json claims = Json::object();
    for (const auto& [claim, tally] : s.tallies) {
        Json t;
        t["checked"] = tally.checked;
        t["violations"] = tally.violations;
        Json ce = Json::array();
        for (const auto& [seq, g6] : tally.counterexamples) ce.push_back(g6);
        t["counterexamples"] = ce;
        claims[std::string(to_string(claim))] = t;
    }
    j["claims"] = claims;
    j["totalViolations"] = s.total_violations();
    j["ok"] = s.ok();
    return j;
}

}  // namespace totdom
