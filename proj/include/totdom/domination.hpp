#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

inline constexpr int kDefaultOracleCap = 32;
/// Subset state of the exact solvers lives in one 64-bit word.
inline constexpr int kMaxOracleCap = 64;

enum class DominationKind { gamma, gamma_total };

/// Exact minimum with a witness attaining it.
struct DominationCertificate {
    DominationKind kind = DominationKind::gamma;
    int value = 0;
    VertexSet witness;
};

/// All gamma-sets: `count` is always exact, `sets` stops at the listing cap.
struct GammaSetEnumeration {
    int gamma = 0;
    std::uint64_t count = 0;
    std::vector<VertexSet> sets;
};

struct PackingCheck {
    bool ok = true;
    std::optional<Edge> violation;  ///< lexicographically least pair with intersecting N[.]
};

/// N[S] = V(G).
bool is_dominating(const Graph& g, const VertexSet& s);
/// Smallest vertex outside N[S], or -1 when S dominates.
Vertex first_undominated(const Graph& g, const VertexSet& s);
/// N(S) = V(G).
bool is_total_dominating(const Graph& g, const VertexSet& s);
/// Pairwise disjoint closed neighborhoods.
PackingCheck is_packing(const Graph& g, const VertexSet& s);

/// Throws OracleCapError if g.order() > cap, UsageError if cap exceeds kMaxOracleCap.
void require_oracle_capacity(const Graph& g, int cap);

/// Minimum dominating set by iterative deepening over k = 0, 1, ...; each level
/// branches on the least-id undominated vertex, trying N[v] in ascending order.
DominationCertificate exact_gamma(const Graph& g, int oracle_cap = kDefaultOracleCap);

/// Same scheme with open neighborhoods. Throws DomainError on an isolated vertex.
DominationCertificate exact_gamma_total(const Graph& g, int oracle_cap = kDefaultOracleCap);

/// Every dominating set of size gamma(G), in lexicographic order.
GammaSetEnumeration enumerate_gamma_sets(const Graph& g, std::size_t list_cap = 1000,
                                         int oracle_cap = kDefaultOracleCap);

/// gamma_t(G) == 2 gamma(G), decided by the exact solvers.
bool is_gamma2_graph_exact(const Graph& g, int oracle_cap = kDefaultOracleCap);

}  // namespace totdom
