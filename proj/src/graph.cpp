#include "totdom/graph.hpp"

#include <algorithm>
#include <queue>

#include "totdom/errors.hpp"

namespace totdom {

Graph::Graph(int order) : Graph(order, std::span<const Edge>{}) {}

Graph::Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    if (order < 0) throw UsageError("graph order must be non-negative");
    if (order > kMaxOrder)
        throw UsageError("graph order " + std::to_string(order) + " exceeds the limit " + std::to_string(kMaxOrder));
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(order))
        throw UsageError("label table size does not match graph order");
    adj_.assign(static_cast<std::size_t>(order), VertexSet(order));
    build(edges);
}

Graph::Graph(int order, std::initializer_list<Edge> edges, std::vector<std::string> labels)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels)) {}

void Graph::build(std::span<const Edge> edges) {
    const int n = order();
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw UsageError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
    lists_.resize(static_cast<std::size_t>(n));
    long twice = 0;
    for (Vertex v = 0; v < n; ++v) {
        lists_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].to_vector();
        twice += static_cast<long>(lists_[static_cast<std::size_t>(v)].size());
    }
    edge_count_ = twice / 2;
}

Vertex Graph::checked(Vertex v) const {
    if (v < 0 || v >= order())
        throw UsageError("vertex id " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
    return v;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : lists_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::name(Vertex v) const {
    checked(v);
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

std::optional<Vertex> Graph::find_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
    require_vertex_set(*this, keep);
    std::vector<Vertex> index(static_cast<std::size_t>(order()), -1);
    std::vector<std::string> labels;
    int next = 0;
    for (Vertex v : keep) {
        index[static_cast<std::size_t>(v)] = next++;
        if (has_labels()) labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : edges())
        if (keep.contains(u) && keep.contains(v))
            kept.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return Graph(next, kept, std::move(labels));
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& s) {
    require_vertex_set(g, s);
    VertexSet out = s;
    for (Vertex v : s) out |= g.neighbors(v);
    return out;
}

VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& s) {
    require_vertex_set(g, s);
    VertexSet out = g.empty_set();
    for (Vertex v : s) out |= g.neighbors(v);
    return out;
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = next;
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbor_list(x)) {
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = next;
                    queue.push(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto comp = component_ids(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

Vertex first_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return v;
    return -1;
}

bool has_isolated_vertex(const Graph& g) { return first_isolated_vertex(g) != -1; }

BasicStats basic_stats(const Graph& g) {
    BasicStats st;
    st.edge_count = g.edge_count();
    if (g.order() == 0) return st;
    st.min_degree = g.degree(0);
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        st.min_degree = std::min(st.min_degree, d);
        st.max_degree = std::max(st.max_degree, d);
        if (d == 0) ++st.isolated_vertex_count;
    }
    auto comp = component_ids(g);
    st.component_count = *std::max_element(comp.begin(), comp.end()) + 1;
    return st;
}

void require_vertex_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw UsageError("vertex set universe " + std::to_string(s.universe()) +
                         " does not match graph order " + std::to_string(g.order()));
}

}  // namespace totdom
