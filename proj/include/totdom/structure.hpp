#pragma once

#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

/// Partition of N[v] into
///   twins     T(v): v and every u with N[u] = N[v],
///   dominated D(v): neighbors u with N[u] a proper subset of N[v],
///   mixed     M(v): the remaining neighbors (each has a neighbor outside N[v]).
struct NeighborhoodPartition {
    Vertex vertex = -1;
    VertexSet twins;
    VertexSet dominated;
    VertexSet mixed;
};

NeighborhoodPartition tdm_partition(const Graph& g, Vertex v);

/// v is special when it is not isolated and no u in M(v) has D(v) within N(u).
bool is_special(const Graph& g, Vertex v);
VertexSet special_vertices(const Graph& g);

/// Partition of V(G) by closed neighborhood. Classes are listed by smallest
/// member. Two isolated vertices u, v have N[u] = {u} and N[v] = {v}, so an
/// isolated vertex always forms a singleton class.
std::vector<VertexSet> true_twin_classes(const Graph& g);

/// Special vertices grouped into true-twin classes, with the smallest id of
/// each class as its representative. `representatives` is an S(G)-set.
struct SGSet {
    VertexSet special;
    std::vector<VertexSet> classes;
    VertexSet representatives;
};

SGSet s_set(const Graph& g);

/// Vertices adjacent to a degree-1 vertex. For a K2 component only the
/// smaller endpoint counts as the support vertex.
VertexSet support_vertices(const Graph& g);

/// Biconnected decomposition. Blocks are vertex sets of the maximal
/// 2-connected pieces and bridges, sorted by their member lists; isolated
/// vertices belong to no block.
///   d1: cut vertices that are the only cut vertex of some block;
///   d2: cut vertices with non-cut neighbors in at least two different blocks.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    VertexSet d1;
    VertexSet d2;
};

BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// True iff every block induces a clique.
bool is_block_graph(const Graph& g);
bool is_block_graph(const Graph& g, const BlockDecomposition& blocks);

bool is_tree(const Graph& g);

}  // namespace totdom
