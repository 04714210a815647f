// Python bindings. Structured results are returned as plain dicts built from
// the same JSON reports the command-line tool prints, so both front ends agree.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "totdom/characterize.hpp"
#include "totdom/domination.hpp"
#include "totdom/errors.hpp"
#include "totdom/forbidden.hpp"
#include "totdom/generators.hpp"
#include "totdom/graph.hpp"
#include "totdom/graph_io.hpp"
#include "totdom/report_json.hpp"
#include "totdom/structure.hpp"
#include "totdom/sweep.hpp"

namespace py = pybind11;
using namespace totdom;

namespace {

py::object to_python(const Json& j) {
    // Leaked on purpose: destroying it after interpreter shutdown would touch a dead runtime.
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

std::vector<Vertex> vertices(const VertexSet& s) { return s.to_vector(); }

VertexSet vertex_set(const Graph& g, const std::vector<Vertex>& ids) {
    VertexSet s(g.order());
    for (Vertex v : ids) {
        if (v < 0 || v >= g.order()) throw UsageError("vertex id " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

ClassificationReport classify_with(const Graph& g, const std::string& method, const std::string& fallback,
                                   int oracle_cap) {
    if (method == "main") return classify_main(g, {parse_fallback(fallback), oracle_cap});
    if (method == "c3c6") return classify_c3c6_free(g);
    if (method == "tree") return classify_tree(g);
    if (method == "block") return classify_block_graph(g);
    throw UsageError("unknown method '" + method + "' (expected main, c3c6, tree or block)");
}

py::dict certificate(const Graph& g, const DominationCertificate& c) {
    py::dict d;
    d["value"] = c.value;
    d["witness"] = vertices(c.witness);
    d["witness_labels"] = to_python(vertex_set_json(g, c.witness));
    return d;
}

}  // namespace

PYBIND11_MODULE(_totdom, m) {
    m.doc() = "Deciding gamma_t(G) = 2 gamma(G) on (H1, H2, C6)-free graphs";

    auto base = py::register_exception<Error>(m, "TotdomError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<OracleCapError>(m, "OracleCapError", base.ptr());
    py::register_exception<EligibilityError>(m, "EligibilityError", base.ptr());

    m.attr("DEFAULT_ORACLE_CAP") = kDefaultOracleCap;
    m.attr("MAX_ORACLE_CAP") = kMaxOracleCap;
    m.attr("MAX_ORDER") = kMaxOrder;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int order, const std::vector<Edge>& edges, const std::vector<std::string>& labels) {
                 return Graph(order, std::span<const Edge>(edges), labels);
             }),
             py::arg("order"), py::arg("edges") = std::vector<Edge>{}, py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("labels", &Graph::labels)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbor_list(v); })
        .def("name", &Graph::name)
        .def("find_label", &Graph::find_label)
        .def("induced_subgraph",
             [](const Graph& g, const std::vector<Vertex>& keep) { return g.induced_subgraph(vertex_set(g, keep)); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("to_edgelist", [](const Graph& g) { return to_edgelist(g); })
        .def("__len__", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph6", [](const std::string& line) { return parse_graph6(line); }, py::arg("line"));
    m.def("parse_edgelist", [](const std::string& text) { return parse_edgelist(text); }, py::arg("text"));

    m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
    m.def("fixture_names", &fixture_names);
    m.def("corona_p2", &corona_p2, py::arg("base"));
    m.def(
        "construction",
        [](const Graph& base, const std::vector<Graph>& attachments) { return construction_h({base, attachments}); },
        py::arg("base"), py::arg("attachments"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
    m.def("random_block_graph", &random_block_graph, py::arg("blocks"), py::arg("max_clique"), py::arg("seed"));
    m.def(
        "small_graphs",
        [](int n, const std::string& filter) {
            std::vector<Graph> out;
            SmallGraphEnumerator e(n, parse_small_graph_filter(filter));
            while (auto g = e.next()) out.push_back(std::move(*g));
            return out;
        },
        py::arg("n"), py::arg("filter") = "all");

    m.def("is_dominating", [](const Graph& g, const std::vector<Vertex>& s) { return is_dominating(g, vertex_set(g, s)); });
    m.def("is_total_dominating",
          [](const Graph& g, const std::vector<Vertex>& s) { return is_total_dominating(g, vertex_set(g, s)); });
    m.def("is_packing", [](const Graph& g, const std::vector<Vertex>& s) { return is_packing(g, vertex_set(g, s)).ok; });
    m.def(
        "gamma",
        [](const Graph& g, int cap) {
            DominationCertificate c;
            {
                py::gil_scoped_release release;
                c = exact_gamma(g, cap);
            }
            return certificate(g, c);
        },
        py::arg("graph"), py::arg("oracle_cap") = kDefaultOracleCap);
    m.def(
        "gamma_total",
        [](const Graph& g, int cap) {
            DominationCertificate c;
            {
                py::gil_scoped_release release;
                c = exact_gamma_total(g, cap);
            }
            return certificate(g, c);
        },
        py::arg("graph"), py::arg("oracle_cap") = kDefaultOracleCap);
    m.def("is_gamma2_exact", &is_gamma2_graph_exact, py::arg("graph"), py::arg("oracle_cap") = kDefaultOracleCap,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "count_gamma_sets",
        [](const Graph& g, int cap) { return enumerate_gamma_sets(g, 0, cap).count; }, py::arg("graph"),
        py::arg("oracle_cap") = kDefaultOracleCap, py::call_guard<py::gil_scoped_release>());
    m.def("count_gamma_sets_formula", &count_gamma_sets_formula, py::arg("graph"));

    m.def("special_vertices", [](const Graph& g) { return vertices(special_vertices(g)); });
    m.def("twin_classes", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& c : true_twin_classes(g)) out.push_back(vertices(c));
        return out;
    });
    m.def("tdm_partition", [](const Graph& g, Vertex v) { return to_python(partition_json(g, tdm_partition(g, v))); });
    m.def("s_set", [](const Graph& g) { return to_python(sg_set_json(g, s_set(g))); });

    m.def("is_chordal", &is_chordal);
    m.def("girth", &girth);
    m.def(
        "check_free",
        [](const Graph& g, const std::string& patterns) {
            auto list = parse_pattern_list(patterns);
            return to_python(freeness_json(g, is_free(g, list)));
        },
        py::arg("graph"), py::arg("patterns") = "h1,h2,c6");
    m.def("is_eligible", [](const Graph& g) { return main_theorem_eligibility(g).eligible; });

    m.def(
        "classify",
        [](const Graph& g, const std::string& method, const std::string& fallback, int cap) {
            ClassificationReport r;
            {
                py::gil_scoped_release release;
                r = classify_with(g, method, fallback, cap);
            }
            return to_python(report_json(g, r));
        },
        py::arg("graph"), py::arg("method") = "main", py::arg("fallback") = "none",
        py::arg("oracle_cap") = kDefaultOracleCap);

    m.def(
        "sweep",
        [](int min_n, int max_n, const std::string& claims, unsigned jobs, int cap) {
            SweepOptions o;
            o.min_n = min_n;
            o.max_n = max_n;
            o.claims = parse_claim_list(claims);
            o.jobs = jobs;
            o.oracle_cap = cap;
            SweepSummary s;
            {
                py::gil_scoped_release release;
                s = run_sweep(o);
            }
            return to_python(sweep_json(s, o));
        },
        py::arg("min_n") = 1, py::arg("max_n") = 6, py::arg("claims") = "all", py::arg("jobs") = 0,
        py::arg("oracle_cap") = kDefaultOracleCap);
}
