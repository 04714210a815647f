#include "totdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "totdom/characterize.hpp"
#include "totdom/errors.hpp"
#include "totdom/generators.hpp"
#include "totdom/graph_io.hpp"
#include "totdom/report_json.hpp"
#include "totdom/sweep.hpp"

namespace totdom {

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string input;
    std::string fixture_name;
    std::string generate;
    std::string format = "graph6";
    bool json = false;
    unsigned jobs = 0;
    std::string fallback = "none";
    int oracle_cap = kDefaultOracleCap;
    std::string patterns = "h1,h2,c6";
    std::vector<std::string> pattern_files;
    std::string method = "main";
    int min_n = 1;
    int max_n = 6;
    std::string claims = "all";
    std::uint64_t seed = 0;
    int count = 1;
    bool corrupt_classifier = false;
};

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto end = text.find(sep, start);
        parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return parts;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path, GraphFormat format) {
    std::string text = read_file(path);
    if (format == GraphFormat::edgelist) return {parse_edgelist(text)};
    std::istringstream in(text);
    Graph6StreamReader reader(in);
    std::vector<Graph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

// Generator specs:
//   fixture:<name>  corona:<fixture>  tree:<n>  block:<b>,<k>  small:<n>[:filter]
//   construction:<base>:<attachment>,<attachment>,...
// Random specs produce `count` graphs with seeds seed, seed + 1, ...
std::vector<Graph> generate_graphs(std::string_view spec, std::uint64_t seed, int count) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw UsageError("generator spec needs 'kind:args', got '" + std::string(spec) + "'");
    auto kind = spec.substr(0, colon);
    auto args = spec.substr(colon + 1);
    if (count < 1) throw UsageError("--count must be positive");
    std::vector<Graph> out;
    if (kind == "fixture") {
        out.push_back(fixture(args));
    } else if (kind == "corona") {
        out.push_back(corona_p2(fixture(args)));
    } else if (kind == "construction") {
        auto parts = split(args, ':');
        if (parts.size() != 2) throw UsageError("construction spec is construction:<base>:<att>,<att>,...");
        ConstructionSpec c{fixture(parts[0]), {}};
        for (auto name : split(parts[1], ',')) c.attachments.push_back(fixture(name));
        out.push_back(construction_h(c));
    } else if (kind == "tree") {
        int n = parse_int(args, "tree order");
        for (int i = 0; i < count; ++i) out.push_back(random_tree(n, seed + static_cast<std::uint64_t>(i)));
    } else if (kind == "block") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw UsageError("block spec is block:<blocks>,<max clique>");
        int b = parse_int(parts[0], "block count");
        int k = parse_int(parts[1], "clique size");
        for (int i = 0; i < count; ++i) out.push_back(random_block_graph(b, k, seed + static_cast<std::uint64_t>(i)));
    } else if (kind == "small") {
        auto parts = split(args, ':');
        if (parts.size() > 2) throw UsageError("small spec is small:<n>[:filter]");
        int n = parse_int(parts[0], "order");
        auto filter = parts.size() == 2 ? parse_small_graph_filter(parts[1]) : SmallGraphFilter::all;
        SmallGraphEnumerator e(n, filter);
        while (auto g = e.next()) out.push_back(std::move(*g));
    } else {
        throw UsageError("unknown generator '" + std::string(kind) +
                         "' (expected fixture, corona, construction, tree, block or small)");
    }
    return out;
}

std::vector<Graph> load_inputs(const Options& o, GraphFormat format) {
    int sources = !o.file.empty() + !o.input.empty() + !o.fixture_name.empty() + !o.generate.empty();
    if (sources != 1)
        throw UsageError("exactly one input source is required: a file, --input, --fixture or --generate");
    if (!o.file.empty()) return read_graphs(o.file, format);
    if (!o.input.empty()) return read_graphs(o.input, format);
    if (!o.fixture_name.empty()) return {fixture(o.fixture_name)};
    return generate_graphs(o.generate, o.seed, o.count);
}

std::vector<Pattern> load_patterns(const Options& o) {
    auto patterns = parse_pattern_list(o.patterns);
    for (const auto& path : o.pattern_files) {
        std::string stem = path;
        if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
        if (auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
        patterns.push_back({stem, parse_edgelist(read_file(path))});
    }
    return patterns;
}

Json error_json(const Graph& g, const std::exception& e) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    Json err;
    err["message"] = e.what();
    if (auto* el = dynamic_cast<const EligibilityError*>(&e)) {
        err["kind"] = "eligibility";
        err["pattern"] = el->pattern();
        Json emb = Json::array();
        for (Vertex v : el->embedding()) emb.push_back(vertex_json(g, v));
        err["witnessEmbedding"] = emb;
    } else if (auto* d = dynamic_cast<const DomainError*>(&e)) {
        err["kind"] = "domain";
        err["vertex"] = d->vertex() >= 0 && d->vertex() < g.order() ? vertex_json(g, d->vertex()) : Json(nullptr);
    } else if (auto* c = dynamic_cast<const OracleCapError*>(&e)) {
        err["kind"] = "oracle_cap";
        err["order"] = c->order();
        err["cap"] = c->cap();
    } else {
        err["kind"] = "usage";
    }
    j["error"] = err;
    return j;
}

std::string human_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render_human(const Json& j, std::ostream& os, const std::string& prefix = "") {
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, prefix.size() + key.size());
    for (const auto& [key, value] : j.items()) {
        if (key == "schemaVersion") continue;
        if (value.is_object()) {
            render_human(value, os, prefix + key + ".");
            continue;
        }
        std::string name = prefix + key;
        os << name << std::string(width - name.size() + 2, ' ') << human_value(value) << '\n';
    }
}

struct Outcome {
    Json json;
    bool failed = false;
};

using GraphCommand = std::function<Json(const Graph&)>;

GraphCommand command_for(const Options& o) {
    const Fallback fallback = parse_fallback(o.fallback);
    const int cap = o.oracle_cap;
    if (o.command == "analyze") {
        return [=](const Graph& g) {
            Json j;
            j["schemaVersion"] = kSchemaVersion;
            j["graph6"] = to_graph6(g);
            j["order"] = g.order();
            j["stats"] = stats_json(basic_stats(g));
            j["chordal"] = is_chordal(g);
            auto len = girth(g);
            j["girth"] = len ? Json(*len) : Json("infinite");
            auto el = main_theorem_eligibility(g);
            Json free = freeness_json(g, el.freeness);
            free.erase("schemaVersion");
            j["freeness"] = free;
            Json sg = sg_set_json(g, s_set(g));
            sg.erase("schemaVersion");
            j["special"] = sg;
            if (has_isolated_vertex(g)) {
                j["classification"] = nullptr;
            } else {
                Json r = report_json(g, classify_main(g, {fallback, cap}));
                r.erase("schemaVersion");
                r.erase("elapsedMicros");
                j["classification"] = r;
            }
            return j;
        };
    }
    if (o.command == "classify") {
        const std::string method = o.method;
        if (method != "main" && method != "c3c6" && method != "tree" && method != "block")
            throw UsageError("unknown --method '" + method + "' (expected main, c3c6, tree or block)");
        return [=](const Graph& g) {
            if (method == "c3c6") return report_json(g, classify_c3c6_free(g));
            if (method == "tree") return report_json(g, classify_tree(g));
            if (method == "block") return report_json(g, classify_block_graph(g));
            return report_json(g, classify_main(g, {fallback, cap}));
        };
    }
    if (o.command == "gamma") return [=](const Graph& g) { return certificate_json(g, exact_gamma(g, cap)); };
    if (o.command == "gamma-t") return [=](const Graph& g) { return certificate_json(g, exact_gamma_total(g, cap)); };
    if (o.command == "special") {
        return [](const Graph& g) {
            SGSet sg = s_set(g);
            Json j;
            j["schemaVersion"] = kSchemaVersion;
            j["special"] = vertex_set_json(g, sg.special);
            Json classes = Json::array();
            for (const auto& c : sg.classes) classes.push_back(vertex_set_json(g, c));
            j["twinClasses"] = classes;
            return j;
        };
    }
    if (o.command == "s-set") {
        return [](const Graph& g) {
            SGSet sg = s_set(g);
            Json j = sg_set_json(g, sg);
            auto packing = is_packing(g, sg.representatives);
            j["packingOk"] = packing.ok;
            j["packingViolation"] = packing.violation ? Json::array({vertex_json(g, packing.violation->first),
                                                                     vertex_json(g, packing.violation->second)})
                                                      : Json(nullptr);
            Vertex uncovered = first_undominated(g, sg.representatives);
            j["dominatingOk"] = uncovered < 0;
            j["uncoveredVertex"] = uncovered < 0 ? Json(nullptr) : vertex_json(g, uncovered);
            return j;
        };
    }
    if (o.command == "count-gamma-sets") {
        return [=](const Graph& g) {
            Json j;
            j["schemaVersion"] = kSchemaVersion;
            auto el = main_theorem_eligibility(g);
            bool use_formula = el.eligible && !has_isolated_vertex(g) &&
                               classify_main(g).verdict == Verdict::is_gamma2;
            if (use_formula) {
                j["method"] = "formula";
                j["count"] = count_gamma_sets_formula(g);
            } else if (fallback == Fallback::oracle) {
                auto e = enumerate_gamma_sets(g, 0, cap);
                j["method"] = "exact_oracle";
                j["count"] = e.count;
                j["gamma"] = e.gamma;
            } else {
                // Reuses the formula's own precondition error.
                j["count"] = count_gamma_sets_formula(g);
            }
            return j;
        };
    }
    if (o.command == "check-free") {
        auto patterns = std::make_shared<std::vector<Pattern>>(load_patterns(o));
        return [patterns](const Graph& g) { return freeness_json(g, is_free(g, *patterns)); };
    }
    throw UsageError("unknown command '" + o.command + "'");
}

int run_graph_command(const Options& o, std::ostream& out, std::ostream& err) {
    const GraphFormat format = parse_format(o.format);
    auto command = command_for(o);
    auto graphs = load_inputs(o, format);

    std::vector<Outcome> outcomes(graphs.size());
    parallel_for(graphs.size(), o.jobs, [&](std::size_t i, unsigned) {
        try {
            outcomes[i].json = command(graphs[i]);
        } catch (const Error& e) {
            outcomes[i] = {error_json(graphs[i], e), true};
        }
    });

    bool failed = false;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& r = outcomes[i];
        failed = failed || r.failed;
        if (o.json) {
            out << r.json.dump() << '\n';
            continue;
        }
        if (graphs.size() > 1) out << (i ? "\n" : "") << "# graph " << i + 1 << '\n';
        if (r.failed) {
            err << "graph " << i + 1 << ": " << r.json["error"]["message"].get<std::string>() << '\n';
            continue;
        }
        render_human(r.json, out);
    }
    return failed ? kExitUsage : kExitOk;
}

int run_generate(const Options& o, std::ostream& out) {
    const GraphFormat format = parse_format(o.format);
    if (!o.file.empty() || !o.input.empty())
        throw UsageError("generate takes --generate SPEC or --fixture NAME");
    for (const auto& g : load_inputs(o, format)) {
        if (format == GraphFormat::graph6) {
            out << to_graph6(g) << '\n';
        } else {
            out << to_edgelist(g);
        }
    }
    return kExitOk;
}

// Deliberately wrong: flips every definite verdict. Exercises the sweep's
// ability to report violations.
ClassificationReport corrupted_classifier(const Graph& g) {
    auto r = classify_main(g);
    if (r.verdict == Verdict::is_gamma2) {
        r.verdict = Verdict::not_gamma2;
    } else if (r.verdict == Verdict::not_gamma2) {
        r.verdict = Verdict::is_gamma2;
    }
    return r;
}

int run_sweep_command(const Options& o, std::ostream& out) {
    SweepOptions so;
    so.min_n = o.min_n;
    so.max_n = o.max_n;
    so.claims = parse_claim_list(o.claims);
    so.jobs = o.jobs;
    so.oracle_cap = o.oracle_cap;
    if (o.corrupt_classifier) so.classifier = corrupted_classifier;

    SweepSummary summary;
    if (!o.file.empty() || !o.input.empty() || !o.fixture_name.empty() || !o.generate.empty()) {
        auto graphs = load_inputs(o, parse_format(o.format));
        summary = run_sweep_on(graphs, so);
    } else {
        summary = run_sweep(so);
    }

    Json j = sweep_json(summary, so);
    if (o.json) {
        out << j.dump() << '\n';
    } else {
        out << "graphs checked     " << summary.graphs << '\n'
            << "isolate-free       " << summary.isolate_free << '\n'
            << "eligible           " << summary.eligible << '\n'
            << "gamma_t = 2 gamma  " << summary.gamma2 << '\n';
        if (summary.skipped_over_cap) out << "skipped (cap)      " << summary.skipped_over_cap << '\n';
        out << '\n' << "claim    checked     violations\n";
        for (const auto& [claim, tally] : summary.tallies) {
            std::string name(to_string(claim));
            std::string checked = std::to_string(tally.checked);
            out << name << std::string(9 - std::min<std::size_t>(name.size(), 8), ' ') << checked
                << std::string(12 - std::min<std::size_t>(checked.size(), 11), ' ') << tally.violations << '\n';
            for (const auto& [seq, g6] : tally.counterexamples) out << "  counterexample " << g6 << '\n';
        }
        out << '\n' << (summary.ok() ? "OK" : "VIOLATIONS FOUND") << '\n';
    }
    return summary.ok() ? kExitOk : kExitViolation;
}

void add_input_options(CLI::App& app, Options& o) {
    app.add_option("file", o.file, "Graph file (graph6 lines or one edge list), '-' for stdin");
    app.add_option("--input", o.input, "graph6 stream, one graph per line");
    app.add_option("--fixture", o.fixture_name, "Named graph: fig1, g1, g2, h1, h2, c<k>, p<k>, ...");
    app.add_option("--generate", o.generate,
                   "Generator spec: fixture:<f>, corona:<f>, construction:<base>:<f>,..., tree:<n>, "
                   "block:<b>,<k>, small:<n>[:filter]");
    app.add_option("--format", o.format, "Input/output format")->check(CLI::IsMember({"graph6", "g6", "edgelist"}));
    app.add_option("--seed", o.seed, "Seed for random generators");
    app.add_option("--count", o.count, "Number of random graphs to generate")->check(CLI::PositiveNumber);
    app.add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)");
    app.add_flag("--json", o.json, "Line-delimited JSON output");
    app.add_option("--oracle-cap", o.oracle_cap, "Largest order the exact oracle accepts")
        ->check(CLI::Range(0, kMaxOracleCap));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide gamma_t = 2 gamma with certificates, and verify the characterization exhaustively.",
                 "totdom"};
    app.require_subcommand(1);
    Options o;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec graph_commands[] = {
        {"analyze", "Statistics, pattern freeness, special vertices and classification"},
        {"classify", "Decide gamma_t = 2 gamma"},
        {"gamma", "Exact domination number with a witness"},
        {"gamma-t", "Exact total domination number with a witness"},
        {"special", "Special vertices and their twin classes"},
        {"s-set", "S(G)-set with its packing and domination checks"},
        {"count-gamma-sets", "Number of minimum dominating sets"},
        {"check-free", "Induced-pattern freeness with a witness embedding"},
    };
    for (const auto& spec : graph_commands) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        add_input_options(*sub, o);
        const std::string name = spec.name;
        if (name == "classify" || name == "analyze" || name == "count-gamma-sets")
            sub->add_option("--fallback", o.fallback, "Exact oracle for ineligible graphs")
                ->check(CLI::IsMember({"none", "oracle"}));
        if (name == "classify")
            sub->add_option("--method", o.method, "Classifier")->check(CLI::IsMember({"main", "c3c6", "tree", "block"}));
        if (name == "check-free") {
            sub->add_option("--patterns", o.patterns, "Comma-separated: c3, c6, h1, h2");
            sub->add_option("--pattern-file", o.pattern_files, "Custom pattern as an edge list (repeatable)");
        }
        sub->callback([&o, name] { o.command = name; });
    }
    auto* gen = app.add_subcommand("generate", "Print generated graphs, one per line");
    add_input_options(*gen, o);
    gen->callback([&o] { o.command = "generate"; });

    auto* sweep = app.add_subcommand("sweep", "Check every claim against the exact oracle on all small graphs");
    add_input_options(*sweep, o);
    sweep->add_option("--min-n", o.min_n, "Smallest order")->check(CLI::Range(0, kMaxEnumerationOrder));
    sweep->add_option("--max-n", o.max_n, "Largest order")->check(CLI::Range(0, kMaxEnumerationOrder));
    sweep->add_option("--claims", o.claims, "Comma-separated claim list or 'all'");
    sweep->add_flag("--corrupt-classifier", o.corrupt_classifier)->group("");
    sweep->callback([&o] { o.command = "sweep"; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (o.command == "generate") return run_generate(o, out);
        if (o.command == "sweep") return run_sweep_command(o, out);
        return run_graph_command(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace totdom
