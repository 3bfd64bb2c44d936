#ifndef SUBSCHED_GRAPH_HPP
#define SUBSCHED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace subsched {

/// User index. 0-based everywhere inside the library; all human-facing I/O
/// (edge lists, DOT labels, CSV, CLI) is 1-based to line up with the usual
/// 1..N numbering of conflict-graph examples.
using UserId = int;

/// Undirected simple conflict graph over users 0..n-1.  One vertex per
/// transmitter-receiver pair, an edge per mutual-interference relation.
/// Immutable after construction; safe to share across threads.
class ConflictGraph {
public:
    ConflictGraph() = default;
    /// Builds from an edge list.  Self-loops are rejected, duplicate edges
    /// (in either orientation) collapse to one, adjacency is symmetrized.
    ConflictGraph(int n, const std::vector<std::pair<UserId, UserId>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    /// Neighbors of v in ascending order.
    const std::vector<UserId>& neighbors(UserId v) const;

    bool has_edge(UserId u, UserId v) const;
    int degree(UserId v) const;

    /// Maximum vertex degree; 0 for the empty or edgeless graph.
    int max_degree() const;

    /// All edges, each once, as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<UserId, UserId>> edge_list() const;

    /// Shortest-path hop count between u and v, std::nullopt if unreachable.
    std::optional<int> bfs_distance(UserId u, UserId v) const;

    /// Hop distances from src to every vertex (-1 where unreachable).
    std::vector<int> bfs_all(UserId src) const;

    bool operator==(const ConflictGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(UserId v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<UserId>> adj_;
};

/// A node's view of the conflict graph: the subgraph induced on every vertex
/// within `radius` hops of `center`, plus the id mapping back to the full
/// graph.  Degrees in the full graph are carried along because the ball
/// truncates the degree of boundary vertices, and degree-one status must be
/// judged against the real topology.
struct LocalView {
    UserId center = 0;        // original id
    int radius = 0;           // hop budget tau
    ConflictGraph subgraph;   // local ids 0..k-1
    std::vector<UserId> to_original;  // local id -> original id, ascending
    std::vector<int> original_degree; // indexed by local id

    /// Local id of an original-graph vertex, if it lies in the view.
    std::optional<int> to_local(UserId original) const;
};

/// Interference network behind a conflict graph: planar positions, the
/// directed connection sets I_j, and optional channel gains.  Carried as data
/// only; no algorithm in the library consumes gains.
struct InterferenceNetwork {
    int n = 0;
    std::vector<std::pair<double, double>> tx_pos;
    std::vector<std::pair<double, double>> rx_pos;
    std::vector<std::pair<UserId, UserId>> links;  // (i -> j), includes all (i, i)
    std::vector<std::pair<std::pair<UserId, UserId>, double>> gains;  // on links only

    /// Checks the structural invariants ((i,i) present, gains on links).
    void validate() const;
};

/// Induced subgraph on all vertices within tau hops of v.
LocalView ball(const ConflictGraph& g, UserId v, int tau);

/// Original-graph ids of the vertices inside `view` whose degree in the
/// original graph is exactly 1.  Ascending order.
std::vector<UserId> degree_one_set(const LocalView& view);

/// eta hops in the conflict graph equal 2*eta+1 hops in the interference
/// network.
inline int hops_conflict_to_interference(int eta) { return 2 * eta + 1; }

}  // namespace subsched

#endif
