#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totdom/domination.hpp"
#include "totdom/forbidden.hpp"
#include "totdom/graph.hpp"
#include "totdom/structure.hpp"

namespace totdom {

enum class Method { main_theorem, chordal_fast_path, c3c6_free, tree, block_graph, exact_oracle };
enum class Verdict { is_gamma2, not_gamma2, unknown };
enum class Fallback { none, oracle };

std::string_view to_string(Method m);
std::string_view to_string(Verdict v);
Fallback parse_fallback(std::string_view name);

/// Outcome of a classification, with concrete certificates.
///
/// Under a characterization method (anything but exact_oracle), is_gamma2
/// implies packing_ok and dominating_ok, and the implied values are
/// (|S|, 2|S|) for the S(G)-set S. Under exact_oracle the implied values are
/// the oracle's own (gamma, gamma_t); the S(G)-set checks are still reported
/// but carry no weight on the verdict.
struct ClassificationReport {
    Method method = Method::main_theorem;
    bool eligible = false;
    std::string witness_pattern;                     ///< empty unless ineligible
    std::optional<Embedding> ineligibility_witness;  ///< induced copy of witness_pattern
    std::optional<SGSet> s_set;
    bool packing_ok = false;
    std::optional<Edge> packing_violation;
    bool dominating_ok = false;
    std::optional<Vertex> uncovered_vertex;
    Verdict verdict = Verdict::unknown;
    std::optional<int> implied_gamma;
    std::optional<int> implied_gamma_t;
    std::optional<std::uint64_t> gamma_set_count;
    std::vector<std::string> notes;
    std::chrono::microseconds elapsed{0};
};

struct ClassifyOptions {
    Fallback fallback = Fallback::none;
    int oracle_cap = kDefaultOracleCap;
};

/// Eligibility for the main characterization: chordal graphs pass directly,
/// otherwise the graph must be free of induced C6, H1 and H2.
struct Eligibility {
    bool eligible = false;
    bool chordal = false;
    FreenessResult freeness;
};

Eligibility main_theorem_eligibility(const Graph& g);

/// Polynomial decision of gamma_t = 2 gamma for (H1, H2, C6)-free graphs: the
/// answer is yes iff an S(G)-set is both a packing and a dominating set.
/// Ineligible graphs get verdict unknown, or the exact oracle when requested.
/// Throws DomainError on an isolated vertex and OracleCapError if the
/// fallback is needed on a graph above the cap.
ClassificationReport classify_main(const Graph& g, const ClassifyOptions& options = {});

/// For (C3, C6)-free graphs, where sup(G) is the unique S(G)-set.
/// Throws EligibilityError with the induced C3 or C6.
ClassificationReport classify_c3c6_free(const Graph& g);

/// Trees of order >= 2; throws UsageError otherwise.
ClassificationReport classify_tree(const Graph& g);

/// Connected block graphs with at least two blocks, using D = d1 + d2.
ClassificationReport classify_block_graph(const Graph& g);

/// Whether "gamma2 graph with min degree >= 2 implies girth <= 6 and an
/// induced C3 or C6" holds on g. Vacuously true when the premise fails.
bool check_girth_corollary(const Graph& g, int oracle_cap = kDefaultOracleCap);

/// Product of |T(v)| over an S(G)-set: the number of gamma-sets of an
/// eligible gamma2 graph. Throws UsageError if g is ineligible or not gamma2,
/// Error on 64-bit overflow.
std::uint64_t count_gamma_sets_formula(const Graph& g);

/// Product of the class sizes, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> twin_class_product(const SGSet& sg);

}  // namespace totdom
