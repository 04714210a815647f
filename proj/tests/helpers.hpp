#pragma once

#include <string>
#include <vector>

#include "totdom/graph.hpp"

namespace testing_helpers {

/// Vertex set by label.
inline totdom::VertexSet by_label(const totdom::Graph& g, const std::vector<std::string>& names) {
    totdom::VertexSet s(g.order());
    for (const auto& n : names) s.insert(*g.find_label(n));
    return s;
}

inline std::vector<std::string> labels_of(const totdom::Graph& g, const totdom::VertexSet& s) {
    std::vector<std::string> out;
    for (auto v : s) out.push_back(g.name(v));
    return out;
}

inline totdom::VertexSet ids(int universe, std::initializer_list<totdom::Vertex> members) {
    return totdom::VertexSet(universe, members);
}

}  // namespace testing_helpers
