#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "totdom/characterize.hpp"
#include "totdom/graph.hpp"
#include "totdom/report_json.hpp"

namespace totdom {

/// Checkable consequences of the characterization, each verified against the
/// exact oracle on every graph of a sweep.
enum class Claim {
    thm1,    ///< eligible graphs: classifier verdict (and implied values) == oracle
    lemma5,  ///< gamma2 graphs: gamma-sets are exactly the packing dominating sets
    lemma6,  ///< any graph: S(G)-set packing + dominating => gamma2
    prop7,   ///< eligible gamma2 graphs: S(G)-set is packing + dominating
    cor2,    ///< chordal => (H1, H2, C6)-free
    cor4,    ///< gamma2 with min degree >= 2 => girth <= 6 and induced C3 or C6
    cor9,    ///< eligible gamma2: product of twin-class sizes == number of gamma-sets
    bounds,  ///< gamma <= gamma_t <= 2 gamma; gamma_t <= 2n/3 for connected n >= 3
    thm3,    ///< (C3, C6)-free: sup(G) is the S(G)-set, classifier == oracle
    thm10,   ///< trees: tree classifier == main classifier == oracle
    thm11,   ///< connected block graphs with >= 2 blocks: D1 + D2 == special, classifier == oracle
    corona,  ///< connected H, 2 <= |H| <= 5: H o P2 has gamma_t = 2|V|/3 and hub special set
};

std::string_view to_string(Claim c);
Claim parse_claim(std::string_view name);
/// Comma-separated; "all" selects every claim.
std::vector<Claim> parse_claim_list(std::string_view list);
std::vector<Claim> all_claims();

using Classifier = std::function<ClassificationReport(const Graph&)>;

struct SweepOptions {
    int min_n = 1;
    int max_n = 6;
    std::vector<Claim> claims = all_claims();
    unsigned jobs = 0;  ///< 0 = hardware concurrency
    /// The classifier under test; defaults to classify_main without fallback.
    Classifier classifier;
    int oracle_cap = kDefaultOracleCap;
    std::size_t max_counterexamples = 5;
};

struct ClaimTally {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// (input sequence number, graph6), the earliest few by sequence number.
    std::vector<std::pair<std::uint64_t, std::string>> counterexamples;
};

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t isolate_free = 0;
    std::uint64_t eligible = 0;
    std::uint64_t gamma2 = 0;
    std::uint64_t skipped_over_cap = 0;
    std::map<Claim, ClaimTally> tallies;

    bool ok() const;
    std::uint64_t total_violations() const;
    void merge(const SweepSummary& other, std::size_t max_counterexamples);
};

/// Checks every selected claim on one graph, accumulating into `summary`.
class SweepChecker {
public:
    explicit SweepChecker(SweepOptions options);
    void check(const Graph& g, std::uint64_t sequence, SweepSummary& summary) const;
    const SweepOptions& options() const { return options_; }

private:
    bool wants(Claim c) const;
    void record(SweepSummary& s, Claim c, bool holds, const Graph& g, std::uint64_t sequence) const;

    SweepOptions options_;
    std::vector<bool> wanted_;
};

/// All labelled graphs with min_n <= n <= max_n (max_n <= 7).
SweepSummary run_sweep(const SweepOptions& options);
/// An explicit corpus, e.g. a graph6 stream.
SweepSummary run_sweep_on(std::span<const Graph> graphs, const SweepOptions& options);

Json sweep_json(const SweepSummary& s, const SweepOptions& options);

/// Runs `fn(i)` for i in [0, count) on `jobs` worker threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t, unsigned)>& fn);
unsigned resolve_jobs(unsigned jobs);

}  // namespace totdom
