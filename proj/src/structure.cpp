#include "totdom/structure.hpp"

#include <algorithm>
#include <numeric>

namespace totdom {

NeighborhoodPartition tdm_partition(const Graph& g, Vertex v) {
    const VertexSet closed_v = closed_neighborhood(g, v);
    NeighborhoodPartition p{v, g.empty_set(), g.empty_set(), g.empty_set()};
    p.twins.insert(v);
    for (Vertex u : g.neighbor_list(v)) {
        VertexSet closed_u = closed_neighborhood(g, u);
        if (closed_u == closed_v)
            p.twins.insert(u);
        else if (closed_u.is_subset_of(closed_v))
            p.dominated.insert(u);
        else
            p.mixed.insert(u);
    }
    return p;
}

bool is_special(const Graph& g, Vertex v) {
    if (g.degree(v) == 0) return false;
    const auto p = tdm_partition(g, v);
    for (Vertex u : p.mixed)
        if (p.dominated.is_subset_of(g.neighbors(u))) return false;
    return true;
}

VertexSet special_vertices(const Graph& g) {
    VertexSet out = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_special(g, v)) out.insert(v);
    return out;
}

namespace {

// Groups `members` by closed neighborhood: sort by fingerprint, then split runs.
std::vector<VertexSet> group_by_closed_neighborhood(const Graph& g, std::vector<Vertex> members) {
    std::vector<VertexSet> closed;
    closed.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) closed.push_back(closed_neighborhood(g, v));

    std::stable_sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
        return closed[static_cast<std::size_t>(a)] < closed[static_cast<std::size_t>(b)];
    });

    std::vector<VertexSet> classes;
    for (std::size_t i = 0; i < members.size();) {
        VertexSet cls = g.empty_set();
        std::size_t j = i;
        while (j < members.size() &&
               closed[static_cast<std::size_t>(members[j])] == closed[static_cast<std::size_t>(members[i])])
            cls.insert(members[j++]);
        classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(classes.begin(), classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return classes;
}

}  // namespace

std::vector<VertexSet> true_twin_classes(const Graph& g) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return group_by_closed_neighborhood(g, std::move(all));
}

SGSet s_set(const Graph& g) {
    SGSet out;
    out.special = special_vertices(g);
    out.classes = group_by_closed_neighborhood(g, out.special.to_vector());
    out.representatives = g.empty_set();
    for (const auto& cls : out.classes) out.representatives.insert(cls.first());
    return out;
}

VertexSet support_vertices(const Graph& g) {
    VertexSet out = g.empty_set();
    for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        Vertex support = g.neighbor_list(leaf).front();
        if (g.degree(support) == 1 && support > leaf) continue;  // K2 component: smaller endpoint supports
        out.insert(support);
    }
    return out;
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    const int n = g.order();
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> disc(un, -1);
    std::vector<int> low(un, 0);
    std::vector<int> membership(un, 0);
    BlockDecomposition out{{}, g.empty_set(), g.empty_set(), g.empty_set()};

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> frames;
    std::vector<Edge> edge_stack;
    int timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1 || g.degree(root) == 0) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = g.neighbor_list(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                auto uv = static_cast<std::size_t>(f.v);
                auto uw = static_cast<std::size_t>(w);
                if (disc[uw] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[uw] = low[uw] = timer++;
                    frames.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[uw] < disc[uv]) {
                    edge_stack.emplace_back(f.v, w);
                    low[uv] = std::min(low[uv], disc[uw]);
                }
                continue;
            }
            const Frame done = f;
            frames.pop_back();
            if (done.parent == -1) continue;
            auto up = static_cast<std::size_t>(done.parent);
            auto uv = static_cast<std::size_t>(done.v);
            low[up] = std::min(low[up], low[uv]);
            if (low[uv] >= disc[up]) {
                VertexSet block = g.empty_set();
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.insert(e.first);
                    block.insert(e.second);
                    if (e == Edge{done.parent, done.v}) break;
                }
                for (Vertex x : block) ++membership[static_cast<std::size_t>(x)];
                out.blocks.push_back(std::move(block));
            }
        }
    }

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); });

    for (Vertex v = 0; v < n; ++v)
        if (membership[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.insert(v);

    for (const auto& block : out.blocks) {
        VertexSet cuts = block & out.cut_vertices;
        if (cuts.size() == 1) out.d1.insert(cuts.first());
    }

    for (Vertex v : out.cut_vertices) {
        int blocks_with_plain_neighbor = 0;
        for (const auto& block : out.blocks) {
            if (!block.contains(v)) continue;
            VertexSet plain = (block - out.cut_vertices) & g.neighbors(v);
            if (!plain.empty()) ++blocks_with_plain_neighbor;
        }
        if (blocks_with_plain_neighbor >= 2) out.d2.insert(v);
    }
    return out;
}

bool is_block_graph(const Graph& g, const BlockDecomposition& blocks) {
    for (const auto& block : blocks.blocks) {
        for (Vertex u : block) {
            VertexSet others = block;
            others.erase(u);
            if (!others.is_subset_of(g.neighbors(u))) return false;
        }
    }
    return true;
}

bool is_block_graph(const Graph& g) { return is_block_graph(g, blocks_and_cut_vertices(g)); }

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

}  // namespace totdom
