#include "subsched/selection.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace subsched {

namespace {

std::string members_str(const std::vector<UserId>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members[i] + 1);
    }
    return s + "}";
}

void check_temp(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho) {
    if (rho < 0) throw std::invalid_argument("selection: rho must be >= 0");
    if (temp.origin_n != g.num_vertices())
        throw std::invalid_argument("selection: temporary graph built over a different conflict graph");
    for (const CliqueVertex& w : temp.vertices)
        if (w.order > rho)
            throw std::invalid_argument("selection: temporary graph contains order-" +
                                        std::to_string(w.order) + " vertices, rho=" +
                                        std::to_string(rho));
}

/// Subgraph of `temp` induced on the surviving vertex indices.  The edge rule
/// is pairwise, so inducing equals re-deriving it on the survivors.
ConsolidatedGraph induce(const ConsolidatedGraph& temp, const std::vector<char>& keep) {
    ConsolidatedGraph out;
    out.origin_n = temp.origin_n;
    std::vector<int> new_index(temp.vertices.size(), -1);
    for (std::size_t i = 0; i < temp.vertices.size(); ++i) {
        if (keep[i]) {
            new_index[i] = out.num_vertices();
            out.vertices.push_back(temp.vertices[i]);
        }
    }
    out.adj.assign(out.vertices.size(), {});
    for (std::size_t i = 0; i < temp.vertices.size(); ++i) {
        if (!keep[i]) continue;
        for (int j : temp.adj[i])
            if (keep[j]) out.adj[new_index[i]].push_back(new_index[j]);
    }
    for (auto& nbrs : out.adj) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

std::vector<std::vector<int>> representation_of(const ConsolidatedGraph& cg, int n) {
    std::vector<std::vector<int>> repr(n);
    for (int i = 0; i < cg.num_vertices(); ++i)
        for (UserId u : cg.vertices[i].members) repr[u].push_back(i);
    return repr;
}

/// The shared removal pass.  `deg_one` flags the users whose singletons (and
/// any vertex containing them) are protected; counts come from the pristine
/// temporary vertex set.
SelectionResult aggressive_core(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho,
                                const std::vector<char>& deg_one) {
    const AppearanceCount ac = count_appearances(temp, g.num_vertices(), rho);

    std::vector<char> keep(temp.vertices.size(), 1);
    for (std::size_t i = 0; i < temp.vertices.size(); ++i) {
        const CliqueVertex& w = temp.vertices[i];
        if (w.order >= rho) continue;
        bool protected_vertex = false;
        for (UserId u : w.members) protected_vertex = protected_vertex || deg_one[u];
        if (protected_vertex) continue;
        bool removable = true;
        for (UserId u : w.members) {
            for (int s = w.order + 1; s <= rho && removable; ++s)
                removable = ac.at(u, s) >= 2;
            if (!removable) break;
        }
        if (removable) keep[i] = 0;
    }

    SelectionResult sel;
    sel.kind = SelectionKind::aggressive;
    sel.consolidated = induce(temp, keep);
    sel.representation = representation_of(sel.consolidated, g.num_vertices());
    return sel;
}

}  // namespace

AppearanceCount count_appearances(const ConsolidatedGraph& temp, int n, int rho) {
    AppearanceCount ac;
    ac.counts.assign(n, std::vector<int>(rho + 1, 0));
    for (const CliqueVertex& w : temp.vertices)
        for (UserId u : w.members) ++ac.counts[u][w.order];
    return ac;
}

SelectionResult aggressive_centralized(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho) {
    check_temp(temp, g, rho);
    std::vector<char> deg_one(g.num_vertices(), 0);
    for (UserId u = 0; u < g.num_vertices(); ++u) deg_one[u] = g.degree(u) == 1;
    SelectionResult sel = aggressive_core(temp, g, rho, deg_one);
    sel.scope.resize(g.num_vertices());
    for (UserId u = 0; u < g.num_vertices(); ++u) sel.scope[u] = u;
    return sel;
}

SelectionResult aggressive_distributed(const ConflictGraph& g, UserId v, int rho, int tau) {
    if (tau < 0) tau = 3 * rho + 1;
    const LocalView view = ball(g, v, tau);
    const ConsolidatedGraph temp = local_temp_graph(g, v, rho, tau);

    std::vector<char> deg_one(g.num_vertices(), 0);
    for (UserId u : degree_one_set(view)) deg_one[u] = 1;

    SelectionResult sel = aggressive_core(temp, g, rho, deg_one);
    sel.scope = view.to_original;
    return sel;
}

SelectionResult conservative_select(const ConsolidatedGraph& temp, const ConflictGraph& g, int rho) {
    check_temp(temp, g, rho);
    const int n = g.num_vertices();

    std::vector<int> order(temp.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const CliqueVertex& wa = temp.vertices[a];
        const CliqueVertex& wb = temp.vertices[b];
        if (wa.order != wb.order) return wa.order > wb.order;
        if (wa.members.size() != wb.members.size()) return wa.members.size() > wb.members.size();
        return wa.members < wb.members;
    });

    std::vector<char> covered(n, 0);
    std::vector<CliqueVertex> accepted;

    auto touches = [&](const CliqueVertex& a, const CliqueVertex& b) {
        for (UserId x : a.members)
            for (UserId y : b.members)
                if (x == y || g.has_edge(x, y)) return true;
        return false;
    };

    for (int idx : order) {
        const CliqueVertex& w = temp.vertices[idx];
        bool free = true;
        for (UserId u : w.members) free = free && !covered[u];
        if (!free) continue;

        // Degree of w in the graph of accepted vertices plus every other
        // user as a singleton.  Later acceptances only merge neighbors, so
        // this is the largest degree w can end with.
        std::vector<char> in_w(n, 0);
        for (UserId u : w.members) in_w[u] = 1;
        std::vector<char> nbr(n, 0);
        for (UserId u : w.members)
            for (UserId x : g.neighbors(u))
                if (!in_w[x]) nbr[x] = 1;
        int deg = 0;
        for (UserId x = 0; x < n; ++x)
            if (nbr[x] && !covered[x]) ++deg;  // uncovered neighbors count as singletons
        for (const CliqueVertex& a : accepted)
            if (touches(a, w)) ++deg;

        int min_member_deg = g.num_vertices();
        for (UserId u : w.members) min_member_deg = std::min(min_member_deg, g.degree(u));

        if (deg <= min_member_deg) {
            accepted.push_back(w);
            for (UserId u : w.members) covered[u] = 1;
        }
    }
    for (UserId u = 0; u < n; ++u)
        if (!covered[u]) accepted.push_back({{u}, 0});

    SelectionResult sel;
    sel.kind = SelectionKind::conservative;
    sel.consolidated = build_temp_graph(g, accepted);
    sel.representation = representation_of(sel.consolidated, n);
    sel.scope.resize(n);
    for (UserId u = 0; u < n; ++u) sel.scope[u] = u;
    return sel;
}

std::optional<std::string> verify_selection(const SelectionResult& sel, const ConflictGraph& g) {
    const ConsolidatedGraph& cg = sel.consolidated;
    std::vector<char> in_scope(g.num_vertices(), 0);
    for (UserId u : sel.scope) in_scope[u] = 1;

    // representation vs vertex member lists
    for (UserId u : sel.scope) {
        for (int idx : sel.representation[u]) {
            const auto& members = cg.vertices[idx].members;
            if (!std::binary_search(members.begin(), members.end(), u))
                return "representation lists vertex " + members_str(members) +
                       " for user " + std::to_string(u + 1) + " which is not a member";
        }
    }
    for (int i = 0; i < cg.num_vertices(); ++i) {
        for (UserId u : cg.vertices[i].members) {
            if (!in_scope[u]) continue;
            const auto& r = sel.representation[u];
            if (std::find(r.begin(), r.end(), i) == r.end())
                return "vertex " + members_str(cg.vertices[i].members) +
                       " missing from representation of user " + std::to_string(u + 1);
        }
    }

    for (UserId u : sel.scope) {
        const int a = sel.appearance_count(u);
        if (a < 1)
            return "user " + std::to_string(u + 1) + " is unrepresented (a(v)=0)";
        if (sel.kind == SelectionKind::conservative && a != 1)
            return "conservative result represents user " + std::to_string(u + 1) + " " +
                   std::to_string(a) + " times";
    }

    if (sel.kind == SelectionKind::aggressive) {
        for (UserId u : sel.scope) {
            if (g.degree(u) != 1) continue;
            if (cg.find_vertex({u}) < 0)
                return "degree-1 user " + std::to_string(u + 1) + " lost its singleton";
        }
    }
    if (sel.kind == SelectionKind::conservative) {
        for (int i = 0; i < cg.num_vertices(); ++i) {
            int min_deg = g.num_vertices();
            for (UserId u : cg.vertices[i].members) min_deg = std::min(min_deg, g.degree(u));
            if (cg.degree(i) > min_deg)
                return "conservative vertex " + members_str(cg.vertices[i].members) +
                       " has degree " + std::to_string(cg.degree(i)) +
                       " above its member minimum " + std::to_string(min_deg);
        }
    }

    // Edge rule, rechecked exhaustively.
    for (int a = 0; a < cg.num_vertices(); ++a) {
        for (int b = a + 1; b < cg.num_vertices(); ++b) {
            bool expected = false;
            for (UserId x : cg.vertices[a].members)
                for (UserId y : cg.vertices[b].members)
                    expected = expected || x == y || g.has_edge(x, y);
            if (expected != cg.has_edge(a, b))
                return "edge rule violated between " + members_str(cg.vertices[a].members) +
                       " and " + members_str(cg.vertices[b].members);
        }
    }
    return std::nullopt;
}

ConsistencyReport check_view_consistency(const ConflictGraph& g, int rho, int tau) {
    if (tau < 0) tau = 3 * rho + 1;
    ConsistencyReport report;

    const ConsolidatedGraph central_temp = build_temp_graph(g, enumerate_r_cliques(g, rho));
    const SelectionResult central = aggressive_centralized(central_temp, g, rho);

    auto neighbor_members = [](const SelectionResult& sel, int idx) {
        std::vector<std::vector<UserId>> out;
        for (int j : sel.consolidated.adj[idx]) out.push_back(sel.consolidated.vertices[j].members);
        std::sort(out.begin(), out.end());
        return out;
    };

    // Views with identical ball vertex sets yield identical local results;
    // dedupe the expensive enumeration behind a cache.
    std::map<std::vector<UserId>, SelectionResult> cache;

    for (UserId v = 0; v < g.num_vertices() && report.pass; ++v) {
        ++report.views_checked;
        const LocalView view = ball(g, v, tau);
        auto it = cache.find(view.to_original);
        if (it == cache.end())
            it = cache.emplace(view.to_original, aggressive_distributed(g, v, rho, tau)).first;
        const SelectionResult& local = it->second;

        // every local vertex containing v must exist centrally with the same
        // neighborhood, and vice versa
        for (int i = 0; i < local.consolidated.num_vertices() && report.pass; ++i) {
            const CliqueVertex& w = local.consolidated.vertices[i];
            if (!std::binary_search(w.members.begin(), w.members.end(), v)) continue;
            ++report.vertices_compared;
            const int central_idx = central.consolidated.find_vertex(w.members);
            if (central_idx < 0) {
                report.pass = false;
                report.failure = "node " + std::to_string(v + 1) + ": local vertex " +
                                 members_str(w.members) + " absent from the centralized graph";
                break;
            }
            const auto local_nbrs = neighbor_members(local, i);
            const auto central_nbrs = neighbor_members(central, central_idx);
            if (local_nbrs != central_nbrs) {
                report.pass = false;
                std::ostringstream oss;
                oss << "node " << v + 1 << ": neighborhood of " << members_str(w.members)
                    << " differs (local " << local_nbrs.size() << " vs centralized "
                    << central_nbrs.size() << " neighbors)";
                report.failure = oss.str();
                break;
            }
        }
        for (int i = 0; i < central.consolidated.num_vertices() && report.pass; ++i) {
            const CliqueVertex& w = central.consolidated.vertices[i];
            if (!std::binary_search(w.members.begin(), w.members.end(), v)) continue;
            if (local.consolidated.find_vertex(w.members) < 0) {
                report.pass = false;
                report.failure = "node " + std::to_string(v + 1) + ": centralized vertex " +
                                 members_str(w.members) + " absent from the local graph";
            }
        }
    }
    return report;
}

}  // namespace subsched
