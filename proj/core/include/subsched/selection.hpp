#ifndef SUBSCHED_SELECTION_HPP
#define SUBSCHED_SELECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "subsched/cliques.hpp"
#include "subsched/graph.hpp"

namespace subsched {

enum class SelectionKind { aggressive, conservative };

/// Outcome of Step 2: the consolidated graph plus, per user, the vertices
/// that represent it (a(v) = representation[v].size()).  For distributed
/// results the representation covers only the users inside the view; `scope`
/// lists exactly the covered users.
struct SelectionResult {
    ConsolidatedGraph consolidated;
    std::vector<std::vector<int>> representation;  // user -> vertex indices
    std::vector<UserId> scope;
    SelectionKind kind = SelectionKind::aggressive;

    int appearance_count(UserId u) const { return static_cast<int>(representation[u].size()); }
};

/// A_u(s): number of order-s vertices of a temporary graph whose members
/// include u.  Computed once from the pristine vertex set; Step 2 stages only
/// ever consult orders above the one being processed, so pristine counts and
/// staged counts coincide.
struct AppearanceCount {
    std::vector<std::vector<int>> counts;  // [user][order 0..rho]
    int at(UserId u, int s) const { return counts[u][s]; }
};

AppearanceCount count_appearances(const ConsolidatedGraph& temp, int n, int rho);

/// Centralized aggressive selection over the full temporary graph.  For each
/// order r < rho, a vertex is dropped when every member appears at least
/// twice at every higher order; vertices containing a degree-one user are
/// never dropped, and in particular every degree-one user keeps its
/// singleton.  Edges of the result follow the Step-1 edge rule on survivors.
SelectionResult aggressive_centralized(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho);

/// Distributed aggressive selection from node v's point of view with tau
/// hops of connectivity knowledge (default 3*rho+1).  Degree-one status is
/// judged by true conflict-graph degree of the users inside the ball.
SelectionResult aggressive_distributed(const ConflictGraph& g, UserId v, int rho, int tau = -1);

/// Conservative selection, reconstructed from its two defining properties:
/// every user is represented exactly once, and the degree of its vertex in
/// the consolidated graph never exceeds its conflict-graph degree.  Greedy
/// over candidates ordered by (order desc, size desc, members asc); a
/// candidate is accepted when all members are still unrepresented and its
/// degree against "accepted vertices + everyone else as singletons" stays
/// within the smallest member degree.  Uncovered users end as singletons.
SelectionResult conservative_select(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho);

/// Checks the structural invariants of a selection result; returns the first
/// violation found, or nullopt when clean.  Covers representation/vertex
/// consistency, a(v) >= 1 (== 1 for conservative), degree-one singleton
/// retention, the conservative degree property, and the edge rule.
std::optional<std::string> verify_selection(const SelectionResult& sel, const ConflictGraph& g);

/// Distributed-vs-centralized consistency: for every node v and every vertex
/// w of G_rho(v) containing v, the neighborhood of w must match the
/// neighborhood of the same vertex in the centralized G_rho, members and
/// edges alike.  tau defaults to 3*rho+1, the bound under which the match is
/// guaranteed; smaller tau values are accepted to probe divergence.
struct ConsistencyReport {
    bool pass = true;
    int views_checked = 0;
    int vertices_compared = 0;
    std::string failure;  // description of the first counterexample
};

ConsistencyReport check_view_consistency(const ConflictGraph& g, int rho, int tau = -1);

}  // namespace subsched

#endif
