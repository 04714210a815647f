#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

/// H o P2: every vertex h of H gets a fresh path h - m - l.
/// Layout: H keeps ids 0..n-1, middles are n..2n-1, leaves 2n..3n-1.
Graph corona_p2(const Graph& h);

/// Base graph G of order n plus one attachment graph per base vertex.
struct ConstructionSpec {
    Graph base;
    std::vector<Graph> attachments;
};

/// Adds hubs u_1..u_n with u_i joined to v_i and to every vertex of G_i.
/// Layout: base 0..n-1, hubs n..2n-1, then each attachment in order.
/// With every attachment equal to K1 the result is exactly corona_p2(base).
Graph construction_h(const ConstructionSpec& spec);

/// Named graphs:
///   fig1, h1, h2, g1, g2   the worked examples (labelled as in the figures)
///   c<k>  cycle on k >= 3 vertices      p<k>  path on k >= 1 vertices
///   star<k>  K_{1,k}                    complete<k> / k<k>  K_k
///   empty<k> edgeless graph on k vertices
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

enum class SmallGraphFilter { all, isolate_free, connected };
SmallGraphFilter parse_small_graph_filter(std::string_view name);

inline constexpr int kMaxEnumerationOrder = 7;

/// Labelled graph on n vertices whose edge set is given by `mask`; bit k is
/// the k-th vertex pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
Graph small_graph_from_mask(int n, std::uint64_t mask);

/// All labelled graphs on n <= 7 vertices in ascending edge-mask order,
/// filtered on the fly.
class SmallGraphEnumerator {
public:
    SmallGraphEnumerator(int n, SmallGraphFilter filter);
    std::optional<Graph> next();
    /// 2^(n(n-1)/2).
    static std::uint64_t mask_count(int n);

private:
    int n_;
    SmallGraphFilter filter_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

bool passes_filter(const Graph& g, SmallGraphFilter filter);

/// Uniformly random labelled tree via Pruefer decoding; deterministic per seed
/// on every platform (mt19937_64 with explicit rejection sampling).
Graph random_tree(int n, std::uint64_t seed);

/// A tree of `blocks` cliques, each of size uniform in 2..max_clique, glued at
/// uniformly chosen existing vertices. Deterministic per seed; not uniform
/// over block graphs.
Graph random_block_graph(int blocks, int max_clique, std::uint64_t seed);

}  // namespace totdom
