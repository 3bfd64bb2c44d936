// Test-only oracles, independent of the library's enumeration and selection
// paths.  The r-clique oracle walks every one of the 2^n subsets and applies
// the definition directly; keep n <= 20 or so.

#ifndef SUBSCHED_TESTS_ORACLES_HPP
#define SUBSCHED_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "subsched/cliques.hpp"
#include "subsched/graph.hpp"

namespace subsched::test {

/// Diameter of G[S] by Floyd-Warshall over the subset; nullopt when
/// disconnected.  Deliberately different machinery from the library's BFS.
inline std::optional<int> oracle_induced_diameter(const ConflictGraph& g,
                                                  const std::vector<UserId>& S) {
    const int m = static_cast<int>(S.size());
    constexpr int kInf = 1 << 20;
    std::vector<std::vector<int>> dist(m, std::vector<int>(m, kInf));
    for (int i = 0; i < m; ++i) dist[i][i] = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && g.has_edge(S[i], S[j])) dist[i][j] = 1;
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    int diam = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (dist[i][j] >= kInf) return std::nullopt;
            diam = std::max(diam, dist[i][j]);
        }
    return diam;
}

/// Every r-clique for r = 0..rho by exhaustive subset enumeration: a subset
/// qualifies at its exact induced diameter r, and survives if no strict
/// superset shares that diameter.  Singletons all qualify (no superset has
/// diameter 0).  Sorted by (order, members).
inline std::vector<CliqueVertex> oracle_r_cliques(const ConflictGraph& g, int rho) {
    const int n = g.num_vertices();
    // masks of every subset whose induced diameter is exactly r, r = 0..rho
    std::vector<std::vector<std::uint32_t>> masks_of_diam(rho + 1);

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<UserId> S;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) S.push_back(v);
        const auto d = oracle_induced_diameter(g, S);
        if (d.has_value() && *d <= rho) masks_of_diam[*d].push_back(mask);
    }

    std::vector<CliqueVertex> out;
    for (int r = 0; r <= rho; ++r) {
        for (std::uint32_t mask : masks_of_diam[r]) {
            bool maximal = true;
            for (std::uint32_t other : masks_of_diam[r]) {
                if (other != mask && (mask & other) == mask) { maximal = false; break; }
            }
            if (!maximal) continue;
            std::vector<UserId> S;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) S.push_back(v);
            out.push_back({S, r});
        }
    }
    std::sort(out.begin(), out.end(), clique_less);
    return out;
}

}  // namespace subsched::test

#endif
