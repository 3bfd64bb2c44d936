#include "subsched/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace subsched {

ConflictGraph::ConflictGraph(int n, const std::vector<std::pair<UserId, UserId>>& edges)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("ConflictGraph: negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("ConflictGraph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("ConflictGraph: self-loop on vertex " + std::to_string(u + 1));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<int>(nbrs.size());
    }
    m_ /= 2;
}

void ConflictGraph::check_vertex(UserId v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

const std::vector<UserId>& ConflictGraph::neighbors(UserId v) const {
    check_vertex(v);
    return adj_[v];
}

bool ConflictGraph::has_edge(UserId u, UserId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int ConflictGraph::degree(UserId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int ConflictGraph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::pair<UserId, UserId>> ConflictGraph::edge_list() const {
    std::vector<std::pair<UserId, UserId>> out;
    out.reserve(m_);
    for (UserId u = 0; u < n_; ++u)
        for (UserId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> ConflictGraph::bfs_all(UserId src) const {
    check_vertex(src);
    std::vector<int> dist(n_, -1);
    std::deque<UserId> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const UserId u = queue.front();
        queue.pop_front();
        for (UserId w : adj_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> ConflictGraph::bfs_distance(UserId u, UserId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    const std::vector<int> dist = bfs_all(u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::optional<int> LocalView::to_local(UserId original) const {
    const auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
    if (it == to_original.end() || *it != original) return std::nullopt;
    return static_cast<int>(it - to_original.begin());
}

LocalView ball(const ConflictGraph& g, UserId v, int tau) {
    if (tau < 0) throw std::invalid_argument("ball: negative radius");
    const std::vector<int> dist = g.bfs_all(v);

    LocalView view;
    view.center = v;
    view.radius = tau;
    for (UserId u = 0; u < g.num_vertices(); ++u)
        if (dist[u] >= 0 && dist[u] <= tau) view.to_original.push_back(u);

    std::vector<int> local_of(g.num_vertices(), -1);
    for (std::size_t i = 0; i < view.to_original.size(); ++i)
        local_of[view.to_original[i]] = static_cast<int>(i);

    std::vector<std::pair<UserId, UserId>> edges;
    for (UserId u : view.to_original) {
        for (UserId w : g.neighbors(u)) {
            if (u < w && local_of[w] >= 0) edges.emplace_back(local_of[u], local_of[w]);
        }
    }
    view.subgraph = ConflictGraph(static_cast<int>(view.to_original.size()), edges);
    view.original_degree.reserve(view.to_original.size());
    for (UserId u : view.to_original) view.original_degree.push_back(g.degree(u));
    return view;
}

std::vector<UserId> degree_one_set(const LocalView& view) {
    std::vector<UserId> out;
    for (std::size_t i = 0; i < view.to_original.size(); ++i)
        if (view.original_degree[i] == 1) out.push_back(view.to_original[i]);
    return out;
}

void InterferenceNetwork::validate() const {
    std::vector<char> self(n, 0);
    for (auto [i, j] : links) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("InterferenceNetwork: link endpoint out of range");
        if (i == j) self[i] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!self[i])
            throw std::invalid_argument("InterferenceNetwork: missing (i,i) link for user " +
                                        std::to_string(i + 1));
    for (const auto& [link, gain] : gains) {
        (void)gain;
        if (std::find(links.begin(), links.end(), link) == links.end())
            throw std::invalid_argument("InterferenceNetwork: gain on a non-link pair");
    }
}

}  // namespace subsched
