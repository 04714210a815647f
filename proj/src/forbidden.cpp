#include "totdom/forbidden.hpp"

#include <algorithm>
#include <cctype>
#include <list>
#include <queue>

#include "totdom/errors.hpp"

namespace totdom {

namespace {

const std::vector<Edge> kHexagon = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};

Graph hexagon_with(std::initializer_list<Edge> chords) {
    std::vector<Edge> edges = kHexagon;
    edges.insert(edges.end(), chords.begin(), chords.end());
    return Graph(6, edges);
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
        const int k = pattern.order();
        anchor_.assign(static_cast<std::size_t>(k), -1);
        for (Vertex i = 0; i < k; ++i) {
            for (Vertex j : pattern.neighbor_list(i)) {
                if (j >= i) break;
                anchor_[static_cast<std::size_t>(i)] = j;
            }
        }
        image_.assign(static_cast<std::size_t>(k), -1);
        used_ = host.empty_set();
    }

    std::optional<Embedding> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        if (place(0)) return image_;
        return std::nullopt;
    }

private:
    bool consistent(Vertex i, Vertex x) const {
        if (used_.contains(x) || host_.degree(x) < pattern_.degree(i)) return false;
        for (Vertex j = 0; j < i; ++j) {
            if (pattern_.adjacent(i, j) != host_.adjacent(x, image_[static_cast<std::size_t>(j)])) return false;
        }
        return true;
    }

    bool try_candidate(Vertex i, Vertex x) {
        if (!consistent(i, x)) return false;
        image_[static_cast<std::size_t>(i)] = x;
        used_.insert(x);
        if (place(i + 1)) return true;
        used_.erase(x);
        image_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    bool place(Vertex i) {
        if (i == pattern_.order()) return true;
        Vertex anchor = anchor_[static_cast<std::size_t>(i)];
        if (anchor >= 0) {
            for (Vertex x : host_.neighbor_list(image_[static_cast<std::size_t>(anchor)]))
                if (try_candidate(i, x)) return true;
        } else {
            for (Vertex x = 0; x < host_.order(); ++x)
                if (try_candidate(i, x)) return true;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> anchor_;  // largest earlier neighbor of each pattern vertex, or -1
    Embedding image_;
    VertexSet used_;
};

}  // namespace

Pattern pattern_c6() { return {"c6", hexagon_with({})}; }
Pattern pattern_c3() { return {"c3", Graph(3, {{0, 1}, {1, 2}, {0, 2}})}; }
Pattern pattern_h1() { return {"h1", hexagon_with({{1, 5}})}; }
Pattern pattern_h2() { return {"h2", hexagon_with({{1, 5}, {2, 4}})}; }

Pattern named_pattern(std::string_view name) {
    auto key = lowercase(name);
    if (key == "c3") return pattern_c3();
    if (key == "c6") return pattern_c6();
    if (key == "h1") return pattern_h1();
    if (key == "h2") return pattern_h2();
    throw UsageError("unknown pattern '" + std::string(name) + "' (expected c3, c6, h1 or h2)");
}

std::vector<Pattern> parse_pattern_list(std::string_view list) {
    std::vector<Pattern> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find(',', start);
        if (end == std::string_view::npos) end = list.size();
        auto item = list.substr(start, end - start);
        if (!item.empty()) out.push_back(named_pattern(item));
        start = end + 1;
    }
    if (out.empty()) throw UsageError("empty pattern list");
    return out;
}

const std::vector<Pattern>& main_theorem_patterns() {
    static const std::vector<Pattern> patterns = {pattern_c6(), pattern_h1(), pattern_h2()};
    return patterns;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    return InducedSearch(host, pattern).run();
}

FreenessResult is_free(const Graph& g, std::span<const Pattern> patterns) {
    for (const auto& p : patterns) {
        if (auto hit = find_induced(g, p.graph)) return {false, p.name, std::move(*hit)};
    }
    return {};
}

std::vector<Vertex> lex_bfs_order(const Graph& g) {
    // Partition refinement over an ordered list of cells; the first cell holds
    // the unvisited vertices with the lexicographically largest label.
    struct Cell {
        std::list<Vertex> members;
        int stamp = -1;
        std::list<Cell>::iterator split;
    };
    const int n = g.order();
    std::list<Cell> cells;
    std::vector<std::list<Cell>::iterator> cell_of(static_cast<std::size_t>(n));
    std::vector<std::list<Vertex>::iterator> pos_of(static_cast<std::size_t>(n));
    std::vector<char> visited(static_cast<std::size_t>(n), 0);

    if (n > 0) {
        auto& all = cells.emplace_back();
        for (Vertex v = 0; v < n; ++v) {
            pos_of[static_cast<std::size_t>(v)] = all.members.insert(all.members.end(), v);
            cell_of[static_cast<std::size_t>(v)] = cells.begin();
        }
    }

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        auto first = cells.begin();
        Vertex v = first->members.front();
        first->members.pop_front();
        if (first->members.empty()) cells.erase(first);
        visited[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);

        for (Vertex w : g.neighbor_list(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            auto cell = cell_of[static_cast<std::size_t>(w)];
            if (cell->stamp != step) {
                cell->stamp = step;
                cell->split = cells.insert(cell, Cell{});
                cell->split->stamp = step;
            }
            auto target = cell->split;
            target->members.splice(target->members.end(), cell->members, pos_of[static_cast<std::size_t>(w)]);
            cell_of[static_cast<std::size_t>(w)] = target;
            if (cell->members.empty()) cells.erase(cell);
        }
    }
    return order;
}

bool is_chordal(const Graph& g) {
    const auto order = lex_bfs_order(g);
    std::vector<int> position(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    for (Vertex v : order) {
        // Neighbors visited before v must form a clique; it suffices that all
        // of them except the latest-visited one are adjacent to that one.
        VertexSet earlier = g.empty_set();
        Vertex latest = -1;
        for (Vertex u : g.neighbor_list(v)) {
            if (position[static_cast<std::size_t>(u)] >= position[static_cast<std::size_t>(v)]) continue;
            earlier.insert(u);
            if (latest == -1 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(latest)])
                latest = u;
        }
        if (latest == -1) continue;
        earlier.erase(latest);
        if (!earlier.is_subset_of(g.neighbors(latest))) return false;
    }
    return true;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        queue = {};
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            // No cycle through s found from here on can beat the current best.
            if (best != -1 && 2 * dist[static_cast<std::size_t>(x)] + 1 >= best) break;
            for (Vertex y : g.neighbor_list(x)) {
                auto uy = static_cast<std::size_t>(y);
                if (dist[uy] == -1) {
                    dist[uy] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[uy] = x;
                    queue.push(y);
                } else if (parent[static_cast<std::size_t>(x)] != y) {
                    int len = dist[static_cast<std::size_t>(x)] + dist[uy] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace totdom
