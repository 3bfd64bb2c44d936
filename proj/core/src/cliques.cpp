#include "subsched/cliques.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace subsched {

namespace {

/// Fixed-width bitset over 64-bit words, sized for the graph at hand.
class Mask {
public:
    Mask() = default;
    explicit Mask(int nbits) : words_((nbits + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool intersects(const Mask& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Mask& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    Mask& operator&=(const Mask& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Mask& operator|=(const Mask& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend Mask operator&(Mask a, const Mask& b) { return a &= b; }
    friend Mask operator|(Mask a, const Mask& b) { return a |= b; }
    Mask and_not(const Mask& o) const {
        Mask r = *this;
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    bool operator==(const Mask& o) const = default;

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                fn(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<Mask> adjacency_masks(const ConflictGraph& g) {
    std::vector<Mask> adj(g.num_vertices(), Mask(g.num_vertices()));
    for (UserId u = 0; u < g.num_vertices(); ++u)
        for (UserId w : g.neighbors(u)) adj[u].set(w);
    return adj;
}

/// Diameter of the subgraph induced on `sub` via per-source frontier
/// expansion.  -1 when disconnected.
int induced_diameter_mask(const std::vector<Mask>& adj, const Mask& sub, int nbits) {
    int diam = 0;
    bool ok = true;
    sub.for_each([&](int src) {
        if (!ok) return;
        Mask visited(nbits);
        visited.set(src);
        Mask frontier = visited;
        int depth = 0;
        while (true) {
            Mask next(nbits);
            frontier.for_each([&](int u) { next |= adj[u]; });
            next &= sub;
            next = next.and_not(visited);
            if (next.empty()) break;
            ++depth;
            visited |= next;
            frontier = next;
        }
        if (visited.count() != sub.count()) ok = false;
        diam = std::max(diam, depth);
    });
    return ok ? diam : -1;
}

/// Bron-Kerbosch with pivoting; reports maximal cliques of size >= 2.
void bron_kerbosch(const std::vector<Mask>& adj, Mask R, Mask P, Mask X, int nbits,
                   std::vector<Mask>& out) {
    if (P.empty() && X.empty()) {
        if (R.count() >= 2) out.push_back(R);
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    int pivot = -1, best = -1;
    (P | X).for_each([&](int u) {
        const int c = (adj[u] & P).count();
        if (c > best) { best = c; pivot = u; }
    });
    const Mask ext = pivot >= 0 ? P.and_not(adj[pivot]) : P;
    ext.for_each([&](int v) {
        Mask R2 = R;
        R2.set(v);
        bron_kerbosch(adj, R2, P & adj[v], X & adj[v], nbits, out);
        P.reset(v);
        X.set(v);
    });
}

/// All maximal sets of induced diameter exactly r, r >= 2.  Explores the
/// cliques of the r-th graph power in ascending-id order; a subtree whose
/// whole closure already has diameter exactly r collapses to that closure.
class ExactDiameterEnumerator {
public:
    ExactDiameterEnumerator(const ConflictGraph& g, const std::vector<Mask>& adj, int r)
        : n_(g.num_vertices()), r_(r), adj_(adj), pow_adj_(n_, Mask(n_)) {
        for (UserId v = 0; v < n_; ++v) {
            const std::vector<int> dist = g.bfs_all(v);
            for (UserId u = 0; u < n_; ++u)
                if (u != v && dist[u] >= 0 && dist[u] <= r) pow_adj_[v].set(u);
        }
    }

    std::vector<Mask> run() {
        for (int v = 0; v < n_; ++v) {
            Mask S(n_);
            S.set(v);
            Mask allowed(n_);
            pow_adj_[v].for_each([&](int u) { if (u > v) allowed.set(u); });
            dfs(S, allowed);
        }
        return filter_maximal();
    }

private:
    void dfs(const Mask& S, const Mask& allowed) {
        const int size = S.count();
        if (size + allowed.count() < r_ + 1) return;

        Mask closure = S | allowed;
        if (induced_diameter_mask(adj_, closure, n_) == r_) {
            candidates_.push_back(closure);
            return;  // every diam-r subset of the closure is dominated by it
        }
        if (size >= r_ + 1 && induced_diameter_mask(adj_, S, n_) == r_)
            candidates_.push_back(S);

        std::vector<int> ext = allowed.to_vector();
        Mask rest = allowed;
        for (int u : ext) {
            rest.reset(u);
            Mask S2 = S;
            S2.set(u);
            dfs(S2, rest & pow_adj_[u]);
        }
    }

    std::vector<Mask> filter_maximal() {
        std::sort(candidates_.begin(), candidates_.end(),
                  [](const Mask& a, const Mask& b) { return a.count() > b.count(); });
        std::vector<Mask> kept;
        for (const Mask& c : candidates_) {
            bool dominated = false;
            for (const Mask& k : kept) {
                if (c == k || c.is_subset_of(k)) { dominated = true; break; }
            }
            if (!dominated) kept.push_back(c);
        }
        return kept;
    }

    int n_;
    int r_;
    const std::vector<Mask>& adj_;
    std::vector<Mask> pow_adj_;
    std::vector<Mask> candidates_;
};

}  // namespace

bool clique_less(const CliqueVertex& a, const CliqueVertex& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
}

int ConsolidatedGraph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool ConsolidatedGraph::has_edge(int a, int b) const {
    const auto& nbrs = adj[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::pair<int, int>> ConsolidatedGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < num_vertices(); ++a)
        for (int b : adj[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

int ConsolidatedGraph::find_vertex(const std::vector<UserId>& members) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i].members == members) return i;
    return -1;
}

std::optional<int> induced_diameter(const ConflictGraph& g, const std::vector<UserId>& S) {
    if (S.empty()) throw std::invalid_argument("induced_diameter: empty set");
    Mask sub(g.num_vertices());
    for (UserId u : S) {
        if (u < 0 || u >= g.num_vertices())
            throw std::invalid_argument("induced_diameter: member out of range");
        if (sub.test(u)) throw std::invalid_argument("induced_diameter: duplicate member");
        sub.set(u);
    }
    const int d = induced_diameter_mask(adjacency_masks(g), sub, g.num_vertices());
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<CliqueVertex> enumerate_r_cliques(const ConflictGraph& g, int rho) {
    if (rho < 0) throw std::invalid_argument("enumerate_r_cliques: rho must be >= 0");
    const int n = g.num_vertices();
    const std::vector<Mask> adj = adjacency_masks(g);

    std::vector<CliqueVertex> out;
    for (UserId v = 0; v < n; ++v) out.push_back({{v}, 0});

    if (rho >= 1) {
        std::vector<Mask> cliques;
        Mask P(n);
        for (int v = 0; v < n; ++v) P.set(v);
        bron_kerbosch(adj, Mask(n), P, Mask(n), n, cliques);
        for (const Mask& c : cliques) out.push_back({c.to_vector(), 1});
    }
    for (int r = 2; r <= rho; ++r) {
        ExactDiameterEnumerator en(g, adj, r);
        for (const Mask& c : en.run()) out.push_back({c.to_vector(), r});
    }
    std::sort(out.begin(), out.end(), clique_less);
    return out;
}

ConsolidatedGraph build_temp_graph(const ConflictGraph& g, const std::vector<CliqueVertex>& cliques) {
    const int n = g.num_vertices();
    std::set<std::vector<UserId>> seen;
    for (const CliqueVertex& w : cliques) {
        if (!std::is_sorted(w.members.begin(), w.members.end()) ||
            std::adjacent_find(w.members.begin(), w.members.end()) != w.members.end())
            throw std::invalid_argument("build_temp_graph: members must be sorted and unique");
        const auto diam = induced_diameter(g, w.members);
        if (!diam.has_value() || *diam != w.order)
            throw std::invalid_argument("build_temp_graph: vertex order disagrees with induced diameter");
        if (!seen.insert(w.members).second)
            throw std::invalid_argument("build_temp_graph: duplicate member set");
    }

    ConsolidatedGraph cg;
    cg.origin_n = n;
    cg.vertices = cliques;
    std::sort(cg.vertices.begin(), cg.vertices.end(), clique_less);

    const int m = cg.num_vertices();
    std::vector<Mask> member_mask(m, Mask(n));
    std::vector<Mask> reach_mask(m, Mask(n));  // members plus their conflict neighbors
    const std::vector<Mask> adj = adjacency_masks(g);
    for (int i = 0; i < m; ++i) {
        for (UserId u : cg.vertices[i].members) {
            member_mask[i].set(u);
            reach_mask[i] |= adj[u];
        }
        reach_mask[i] |= member_mask[i];
    }
    cg.adj.assign(m, {});
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (reach_mask[a].intersects(member_mask[b])) {
                cg.adj[a].push_back(b);
                cg.adj[b].push_back(a);
            }
        }
    }
    for (auto& nbrs : cg.adj) std::sort(nbrs.begin(), nbrs.end());
    return cg;
}

ConsolidatedGraph local_temp_graph(const ConflictGraph& g, UserId v, int rho, int tau) {
    if (tau < rho + 1)
        throw std::invalid_argument("local_temp_graph: need tau >= rho+1 hops of connectivity");
    const LocalView view = ball(g, v, tau);
    const std::vector<CliqueVertex> local = enumerate_r_cliques(view.subgraph, rho);

    ConsolidatedGraph cg = build_temp_graph(view.subgraph, local);
    for (CliqueVertex& w : cg.vertices)
        for (UserId& u : w.members) u = view.to_original[u];
    cg.origin_n = g.num_vertices();
    return cg;
}

}  // namespace subsched
