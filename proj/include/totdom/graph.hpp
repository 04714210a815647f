#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totdom/vertex_set.hpp"

namespace totdom {

using Edge = std::pair<Vertex, Vertex>;

/// Adjacency is stored as n bitsets of n bits, so memory grows as n^2 / 8 bytes.
inline constexpr int kMaxOrder = 1 << 16;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Every vertex keeps its open neighborhood both as a bitset (for set
/// algebra) and as an ascending list (for traversal). Optional labels are
/// a display side table only; equality ignores them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Duplicate edges collapse. Throws UsageError on a self-loop, an id outside 0..order-1,
    /// or an order above kMaxOrder.
    Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels = {});
    Graph(int order, std::initializer_list<Edge> edges, std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return edge_count_; }

    int degree(Vertex v) const { return static_cast<int>(lists_[checked(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[checked(u)].contains(v); }

    /// N(v) without copying.
    const VertexSet& neighbors(Vertex v) const { return adj_[checked(v)]; }
    const std::vector<Vertex>& neighbor_list(Vertex v) const { return lists_[checked(v)]; }

    /// Edges (u, v) with u < v in ascending order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// The vertex label, or its decimal id if the graph is unlabeled.
    std::string name(Vertex v) const;
    /// Id of the vertex carrying `label`, if any.
    std::optional<Vertex> find_label(const std::string& label) const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending order; labels carried over.
    Graph induced_subgraph(const VertexSet& keep) const;

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    Vertex checked(Vertex v) const;
    void build(std::span<const Edge> edges);

    std::vector<VertexSet> adj_;
    std::vector<std::vector<Vertex>> lists_;
    std::vector<std::string> labels_;
    long edge_count_ = 0;
};

/// N(v). Throws UsageError for an out-of-range id.
VertexSet open_neighborhood(const Graph& g, Vertex v);
/// N[v] = N(v) + v.
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N[S]; N[empty] is empty.
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& s);
/// N(S), the union of open neighborhoods.
VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& s);

struct BasicStats {
    int min_degree = 0;
    int max_degree = 0;
    long edge_count = 0;
    int component_count = 0;
    int isolated_vertex_count = 0;

    friend bool operator==(const BasicStats&, const BasicStats&) = default;
};

BasicStats basic_stats(const Graph& g);

/// Component index per vertex, numbered in order of smallest member.
std::vector<int> component_ids(const Graph& g);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// First isolated vertex, or -1.
Vertex first_isolated_vertex(const Graph& g);

/// Throws UsageError unless every id in `s` belongs to `g`.
void require_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace totdom
