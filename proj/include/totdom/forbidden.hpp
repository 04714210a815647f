#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

/// A named pattern graph for induced-subgraph tests.
struct Pattern {
    std::string name;
    Graph graph;
};

/// Hexagon 0-1-2-3-4-5-0.
Pattern pattern_c6();
/// Triangle.
Pattern pattern_c3();
/// Hexagon plus the chord 1-5 (its endpoints share the neighbor 0).
Pattern pattern_h1();
/// Hexagon plus the chords 1-5 and 2-4.
Pattern pattern_h2();

/// "c3", "c6", "h1" or "h2" (case-insensitive).
Pattern named_pattern(std::string_view name);
/// Comma-separated list of pattern names, kept in the given order.
std::vector<Pattern> parse_pattern_list(std::string_view list);

/// The default eligibility list for the main characterization: C6, H1, H2.
const std::vector<Pattern>& main_theorem_patterns();

/// image[i] is the host vertex that pattern vertex i maps to.
using Embedding = std::vector<Vertex>;

/// Exhaustive backtracking search for an induced copy of `pattern` in `host`.
/// Pattern vertices are placed in id order and host candidates tried in
/// ascending order, so the returned embedding is the lexicographically least.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

struct FreenessResult {
    bool free = true;
    std::string pattern;  ///< name of the first pattern found, empty when free
    Embedding witness;
};

/// Tries the patterns in order and reports the first one that embeds.
FreenessResult is_free(const Graph& g, std::span<const Pattern> patterns);

/// Lexicographic breadth-first search visit order (ties broken by smallest id).
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// True iff the reverse LexBFS order is a perfect elimination ordering.
bool is_chordal(const Graph& g);

/// Length of a shortest cycle; nullopt (infinite girth) for forests.
std::optional<int> girth(const Graph& g);

}  // namespace totdom
