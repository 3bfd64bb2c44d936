#ifndef SUBSCHED_CLIQUES_HPP
#define SUBSCHED_CLIQUES_HPP

#include <optional>
#include <vector>

#include "subsched/graph.hpp"

namespace subsched {

/// A sub-network candidate: a set of users whose induced subgraph has
/// diameter exactly `order`, maximal among same-order sets.  Members are
/// sorted ascending.
struct CliqueVertex {
    std::vector<UserId> members;
    int order = 0;

    bool operator==(const CliqueVertex& other) const = default;
};

/// Ordering used everywhere downstream: by order, then lexicographic members.
bool clique_less(const CliqueVertex& a, const CliqueVertex& b);

/// Graph over clique vertices.  Serves both the temporary graph (all
/// candidates) and the consolidated graph (Step 2 survivors).  An edge joins
/// two vertices whose member sets overlap or touch via a conflict edge.
struct ConsolidatedGraph {
    std::vector<CliqueVertex> vertices;   // sorted by clique_less
    std::vector<std::vector<int>> adj;    // vertex-index adjacency, ascending
    int origin_n = 0;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int degree(int idx) const { return static_cast<int>(adj[idx].size()); }
    int max_degree() const;
    bool has_edge(int a, int b) const;
    std::vector<std::pair<int, int>> edge_list() const;
    /// Index of the vertex with exactly these members, or -1.
    int find_vertex(const std::vector<UserId>& members) const;
};

/// Diameter of the subgraph induced by S, distances measured inside the
/// induced subgraph.  std::nullopt when G[S] is disconnected.
std::optional<int> induced_diameter(const ConflictGraph& g, const std::vector<UserId>& S);

/// All r-cliques of g for r = 0..rho: every singleton, and for each r >= 1
/// every maximal set of induced diameter exactly r (maximality judged among
/// sets of the same order).  Sorted by (order, members).
std::vector<CliqueVertex> enumerate_r_cliques(const ConflictGraph& g, int rho);

/// Temporary graph over the given clique vertices with the member-overlap /
/// conflict-edge rule applied exhaustively.  Rejects duplicate member sets
/// and vertices whose induced diameter disagrees with their order.
ConsolidatedGraph build_temp_graph(const ConflictGraph& g, const std::vector<CliqueVertex>& cliques);

/// The temporary graph as seen from node v with tau hops of connectivity
/// knowledge: r-cliques of ball(g, v, tau) mapped back to original ids.
/// Requires tau >= rho + 1.
ConsolidatedGraph local_temp_graph(const ConflictGraph& g, UserId v, int rho, int tau);

}  // namespace subsched

#endif
