#include "totdom/characterize.hpp"

#include "totdom/errors.hpp"

namespace totdom {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::main_theorem: return "main_theorem";
        case Method::chordal_fast_path: return "chordal_fast_path";
        case Method::c3c6_free: return "c3c6_free";
        case Method::tree: return "tree";
        case Method::block_graph: return "block_graph";
        case Method::exact_oracle: return "exact_oracle";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::is_gamma2: return "is_gamma2";
        case Verdict::not_gamma2: return "not_gamma2";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

Fallback parse_fallback(std::string_view name) {
    if (name == "none") return Fallback::none;
    if (name == "oracle") return Fallback::oracle;
    throw UsageError("unknown fallback '" + std::string(name) + "' (expected oracle or none)");
}

std::optional<std::uint64_t> twin_class_product(const SGSet& sg) {
    std::uint64_t product = 1;
    for (const auto& cls : sg.classes) {
        auto size = static_cast<std::uint64_t>(cls.size());
        if (product > UINT64_MAX / size) return std::nullopt;
        product *= size;
    }
    return product;
}

namespace {

using Clock = std::chrono::steady_clock;

void require_isolate_free(const Graph& g) {
    if (Vertex iso = first_isolated_vertex(g); iso != -1)
        throw DomainError("graph has isolated vertex " + g.name(iso) + "; gamma_t is undefined", iso);
}

SGSet singleton_classes(const VertexSet& members) {
    SGSet sg{members, {}, members};
    for (Vertex v : members) sg.classes.push_back(VertexSet(members.universe(), {v}));
    return sg;
}

// Fills the packing/domination certificates for the S(G)-set already stored in the report.
void check_candidate(const Graph& g, ClassificationReport& r) {
    const VertexSet& s = r.s_set->representatives;
    auto packing = is_packing(g, s);
    r.packing_ok = packing.ok;
    r.packing_violation = packing.violation;
    Vertex missing = first_undominated(g, s);
    r.dominating_ok = missing == -1;
    if (missing != -1) r.uncovered_vertex = missing;
}

void settle_by_characterization(ClassificationReport& r) {
    if (r.packing_ok && r.dominating_ok) {
        const int k = r.s_set->representatives.size();
        r.verdict = Verdict::is_gamma2;
        r.implied_gamma = k;
        r.implied_gamma_t = 2 * k;
        r.gamma_set_count = twin_class_product(*r.s_set);
    } else {
        r.verdict = Verdict::not_gamma2;
    }
}

ClassificationReport classify_with_support_set(const Graph& g, Method method) {
    const auto start = Clock::now();
    require_isolate_free(g);
    for (const auto& p : {pattern_c3(), pattern_c6()}) {
        if (auto hit = find_induced(g, p.graph))
            throw EligibilityError("graph contains an induced " + p.name + "; it is not (C3,C6)-free", p.name,
                                   std::move(*hit));
    }
    ClassificationReport r;
    r.method = method;
    r.eligible = true;
    r.s_set = singleton_classes(support_vertices(g));
    r.notes.push_back("sup(G) is the unique S(G)-set of a (C3,C6)-free graph");
    check_candidate(g, r);
    settle_by_characterization(r);
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return r;
}

}  // namespace

Eligibility main_theorem_eligibility(const Graph& g) {
    Eligibility e;
    if (is_chordal(g)) {
        e.eligible = true;
        e.chordal = true;
        return e;
    }
    e.freeness = is_free(g, main_theorem_patterns());
    e.eligible = e.freeness.free;
    return e;
}

ClassificationReport classify_main(const Graph& g, const ClassifyOptions& options) {
    const auto start = Clock::now();
    require_isolate_free(g);

    ClassificationReport r;
    r.s_set = s_set(g);
    check_candidate(g, r);

    auto eligibility = main_theorem_eligibility(g);
    r.eligible = eligibility.eligible;
    if (eligibility.eligible) {
        r.method = eligibility.chordal ? Method::chordal_fast_path : Method::main_theorem;
        settle_by_characterization(r);
    } else {
        r.witness_pattern = eligibility.freeness.pattern;
        r.ineligibility_witness = eligibility.freeness.witness;
        if (options.fallback == Fallback::oracle) {
            require_oracle_capacity(g, options.oracle_cap);
            const int gamma = exact_gamma(g, options.oracle_cap).value;
            const int gamma_t = exact_gamma_total(g, options.oracle_cap).value;
            r.method = Method::exact_oracle;
            r.verdict = gamma_t == 2 * gamma ? Verdict::is_gamma2 : Verdict::not_gamma2;
            r.implied_gamma = gamma;
            r.implied_gamma_t = gamma_t;
        } else {
            r.method = Method::main_theorem;
            r.verdict = Verdict::unknown;
            r.notes.push_back("graph contains an induced " + r.witness_pattern +
                              "; the characterization does not apply");
        }
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return r;
}

ClassificationReport classify_c3c6_free(const Graph& g) { return classify_with_support_set(g, Method::c3c6_free); }

ClassificationReport classify_tree(const Graph& g) {
    if (g.order() < 2 || !is_tree(g)) throw UsageError("classify_tree needs a tree of order at least 2");
    return classify_with_support_set(g, Method::tree);
}

ClassificationReport classify_block_graph(const Graph& g) {
    const auto start = Clock::now();
    if (!is_connected(g) || g.order() < 2) throw UsageError("classify_block_graph needs a connected graph");
    auto blocks = blocks_and_cut_vertices(g);
    if (blocks.blocks.size() < 2) throw UsageError("classify_block_graph needs at least two blocks");
    if (!is_block_graph(g, blocks)) throw UsageError("not a block graph: some block is not a clique");

    ClassificationReport r;
    r.method = Method::block_graph;
    r.eligible = true;
    r.s_set = singleton_classes(blocks.d1 | blocks.d2);
    r.notes.push_back("D = D1 + D2 is the unique S(G)-set; uniqueness of the minimum dominating set is implied");
    check_candidate(g, r);
    settle_by_characterization(r);
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return r;
}

bool check_girth_corollary(const Graph& g, int oracle_cap) {
    if (g.order() == 0 || basic_stats(g).min_degree < 2) return true;
    auto r = classify_main(g, {Fallback::oracle, oracle_cap});
    if (r.verdict != Verdict::is_gamma2) return true;
    auto g_len = girth(g);
    bool short_cycle = g_len && *g_len <= 6;
    bool induced = find_induced(g, pattern_c3().graph) || find_induced(g, pattern_c6().graph);
    return short_cycle && induced;
}

std::uint64_t count_gamma_sets_formula(const Graph& g) {
    auto r = classify_main(g);
    if (!r.eligible)
        throw UsageError("graph contains an induced " + r.witness_pattern + "; the counting formula does not apply");
    if (r.verdict != Verdict::is_gamma2) throw UsageError("graph is not a (gamma_t, 2 gamma)-graph");
    if (!r.gamma_set_count) throw Error("gamma-set count overflows 64 bits");
    return *r.gamma_set_count;
}

}  // namespace totdom
