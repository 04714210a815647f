#include "totdom/domination.hpp"

#include <algorithm>
#include <bit>

#include "totdom/errors.hpp"

namespace totdom {

bool is_dominating(const Graph& g, const VertexSet& s) { return first_undominated(g, s) == -1; }

Vertex first_undominated(const Graph& g, const VertexSet& s) {
    VertexSet missing = g.all_vertices() - closed_neighborhood_of_set(g, s);
    return missing.first();
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    return open_neighborhood_of_set(g, s) == g.all_vertices();
}

PackingCheck is_packing(const Graph& g, const VertexSet& s) {
    require_vertex_set(g, s);
    const auto members = s.to_vector();
    std::vector<VertexSet> closed;
    closed.reserve(members.size());
    for (Vertex v : members) closed.push_back(closed_neighborhood(g, v));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (closed[i].intersects(closed[j])) return {false, Edge{members[i], members[j]}};
    return {};
}

void require_oracle_capacity(const Graph& g, int cap) {
    if (cap < 0 || cap > kMaxOracleCap)
        throw UsageError("oracle cap must lie in 0.." + std::to_string(kMaxOracleCap));
    if (g.order() > cap) throw OracleCapError(g.order(), cap);
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

VertexSet to_set(int n, Mask m) {
    VertexSet s(n);
    while (m) {
        s.insert(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

// Cover search: find `budget` vertices whose neighborhoods (closed or open,
// per `hoods`) cover every vertex. Branches on the least uncovered vertex.
class CoverSearch {
public:
    CoverSearch(std::vector<Mask> hoods, int n) : hoods_(std::move(hoods)), all_(full_mask(n)) {
        for (Mask h : hoods_) widest_ = std::max(widest_, std::popcount(h));
        // A vertex v is covered by w iff v is in hoods[w]; hoods are symmetric
        // for both closed and open neighborhoods, so the candidate list of v is hoods[v].
    }

    std::optional<Mask> solve_with(int budget) {
        chosen_ = 0;
        if (search(0, budget)) return chosen_;
        return std::nullopt;
    }

private:
    bool search(Mask covered, int budget) {
        Mask uncovered = all_ & ~covered;
        if (uncovered == 0) return true;
        if (budget == 0 || std::popcount(uncovered) > budget * widest_) return false;
        int v = std::countr_zero(uncovered);
        Mask options = hoods_[static_cast<std::size_t>(v)];
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            chosen_ |= bit(w);
            if (search(covered | hoods_[static_cast<std::size_t>(w)], budget - 1)) return true;
            chosen_ &= ~bit(w);
        }
        return false;
    }

    std::vector<Mask> hoods_;
    Mask all_;
    int widest_ = 0;
    Mask chosen_ = 0;
};

std::vector<Mask> neighborhood_masks(const Graph& g, bool closed) {
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        Mask m = closed ? bit(v) : 0;
        for (Vertex u : g.neighbor_list(v)) m |= bit(u);
        out[static_cast<std::size_t>(v)] = m;
    }
    return out;
}

DominationCertificate minimum_cover(const Graph& g, DominationKind kind) {
    const int n = g.order();
    CoverSearch search(neighborhood_masks(g, kind == DominationKind::gamma), n);
    for (int k = 0; k <= n; ++k) {
        if (auto found = search.solve_with(k)) return {kind, k, to_set(n, *found)};
    }
    throw Error("no cover found; the graph must contain an isolated vertex");
}

}  // namespace

DominationCertificate exact_gamma(const Graph& g, int oracle_cap) {
    require_oracle_capacity(g, oracle_cap);
    return minimum_cover(g, DominationKind::gamma);
}

DominationCertificate exact_gamma_total(const Graph& g, int oracle_cap) {
    if (Vertex iso = first_isolated_vertex(g); iso != -1)
        throw DomainError("total domination number undefined: vertex " + g.name(iso) + " is isolated", iso);
    require_oracle_capacity(g, oracle_cap);
    return minimum_cover(g, DominationKind::gamma_total);
}

GammaSetEnumeration enumerate_gamma_sets(const Graph& g, std::size_t list_cap, int oracle_cap) {
    const int gamma = exact_gamma(g, oracle_cap).value;
    const int n = g.order();
    const auto closed = neighborhood_masks(g, true);

    // due[i]: vertices whose closed neighborhood has largest member i; once
    // vertex i has been decided they must already be dominated.
    std::vector<Mask> due(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        int last = 63 - std::countl_zero(closed[static_cast<std::size_t>(v)]);
        due[static_cast<std::size_t>(last)] |= bit(v);
    }

    GammaSetEnumeration out;
    out.gamma = gamma;
    auto visit = [&](auto&& self, Vertex i, Mask chosen, Mask covered, int size) -> void {
        if (i == n) {
            ++out.count;
            if (out.sets.size() < list_cap) out.sets.push_back(to_set(n, chosen));
            return;
        }
        const Mask must = due[static_cast<std::size_t>(i)];
        if (size < gamma) {
            Mask c = covered | closed[static_cast<std::size_t>(i)];
            if ((must & ~c) == 0) self(self, i + 1, chosen | bit(i), c, size + 1);
        }
        // Excluding i is only possible if the remaining vertices can still fill the set.
        if (n - i - 1 >= gamma - size && (must & ~covered) == 0) self(self, i + 1, chosen, covered, size);
    };
    visit(visit, 0, 0, 0, 0);
    return out;
}

bool is_gamma2_graph_exact(const Graph& g, int oracle_cap) {
    auto gt = exact_gamma_total(g, oracle_cap);
    auto gm = exact_gamma(g, oracle_cap);
    return gt.value == 2 * gm.value;
}

}  // namespace totdom
