#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "totdom/graph.hpp"

namespace totdom {

enum class GraphFormat { graph6, edgelist };

/// "graph6" or "edgelist"; throws UsageError otherwise.
GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat format);

/// Parses a single graph. A graph6 text may carry the optional ">>graph6<<" header
/// and a trailing newline. The edge-list grammar is:
///
///     # comment
///     n 5          (optional header, must come first)
///     0 1
///     a b          (labels: any non-integer token switches the file to label mode)
///
/// In label mode every token is a label and ids are assigned in order of first
/// appearance. Duplicate edges collapse; self-loops and ids >= n are ParseErrors.
Graph parse_graph(std::string_view text, GraphFormat format);

/// graph6 has no trailing newline; edge lists end with one.
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view line, std::size_t line_number = 1);
std::string to_graph6(const Graph& g);

Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

/// Reads one graph6 graph per line, skipping blank lines.
class Graph6StreamReader {
public:
    explicit Graph6StreamReader(std::istream& in) : in_(in) {}
    std::optional<Graph> next();
    std::size_t line_number() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

}  // namespace totdom
