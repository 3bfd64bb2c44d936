#include "subsched/generators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "subsched/rng.hpp"

namespace subsched {

std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::line_clique: return "line_clique";
        case GraphFamily::line_star: return "line_star";
        case GraphFamily::erdos_renyi: return "erdos_renyi";
        case GraphFamily::barabasi_albert: return "barabasi_albert";
        case GraphFamily::geometric: return "geometric";
    }
    throw std::logic_error("unknown family");
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "line_clique") return GraphFamily::line_clique;
    if (name == "line_star") return GraphFamily::line_star;
    if (name == "erdos_renyi") return GraphFamily::erdos_renyi;
    if (name == "barabasi_albert") return GraphFamily::barabasi_albert;
    if (name == "geometric") return GraphFamily::geometric;
    throw std::invalid_argument("unknown graph family: " + name);
}

void GenSpec::validate() const {
    if (n < 1) throw std::invalid_argument("GenSpec: n must be >= 1");
    switch (family) {
        case GraphFamily::line_clique:
        case GraphFamily::line_star:
            if (n < 4) throw std::invalid_argument("GenSpec: line families need n >= 4");
            break;
        case GraphFamily::erdos_renyi:
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("GenSpec: p outside [0,1]");
            break;
        case GraphFamily::barabasi_albert:
            if (m < 1 || m >= n) throw std::invalid_argument("GenSpec: need 1 <= m < n");
            break;
        case GraphFamily::geometric:
            if (d <= 0.0) throw std::invalid_argument("GenSpec: d must be > 0");
            break;
    }
}

std::string GenSpec::params_string() const {
    char buf[48];
    switch (family) {
        case GraphFamily::line_clique:
        case GraphFamily::line_star:
            return "";
        case GraphFamily::erdos_renyi:
            std::snprintf(buf, sizeof buf, "p=%g", p);
            return buf;
        case GraphFamily::barabasi_albert:
            std::snprintf(buf, sizeof buf, "m=%d", m);
            return buf;
        case GraphFamily::geometric:
            std::snprintf(buf, sizeof buf, "d=%g", d);
            return buf;
    }
    return "";
}

ConflictGraph line_clique(int n) {
    if (n < 4) throw std::invalid_argument("line_clique: n must be >= 4");
    std::vector<std::pair<UserId, UserId>> edges;
    edges.reserve(n);
    for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);  // path 1..N-2
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 2, n - 1);
    edges.emplace_back(n - 3, n - 1);
    return ConflictGraph(n, edges);
}

ConflictGraph line_star(int n) {
    if (n < 4) throw std::invalid_argument("line_star: n must be >= 4");
    std::vector<std::pair<UserId, UserId>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 3, n - 1);
    return ConflictGraph(n, edges);
}

ConflictGraph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p outside [0,1]");
    Rng rng(derive_seed(seed, {0x4552u}));  // "ER" stream
    std::vector<std::pair<UserId, UserId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return ConflictGraph(n, edges);
}

ConflictGraph barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert: need 1 <= m < n");
    Rng rng(derive_seed(seed, {0x4241u}));  // "BA" stream
    std::vector<std::pair<UserId, UserId>> edges;
    std::vector<std::int64_t> degree(n, 0);
    for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            edges.emplace_back(i, j);
            ++degree[i];
            ++degree[j];
        }
    }
    std::vector<int> chosen;
    for (int t = m + 1; t < n; ++t) {
        chosen.clear();
        for (int pick = 0; pick < m; ++pick) {
            std::int64_t total = 0;
            for (int u = 0; u < t; ++u) {
                bool skip = false;
                for (int c : chosen) skip = skip || (c == u);
                if (!skip) total += degree[u];
            }
            std::int64_t ticket = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(total)));
            int target = -1;
            for (int u = 0; u < t; ++u) {
                bool skip = false;
                for (int c : chosen) skip = skip || (c == u);
                if (skip) continue;
                if (ticket < degree[u]) { target = u; break; }
                ticket -= degree[u];
            }
            chosen.push_back(target);
        }
        for (int u : chosen) {
            edges.emplace_back(u, t);
            ++degree[u];
            ++degree[t];
        }
    }
    return ConflictGraph(n, edges);
}

std::pair<InterferenceNetwork, ConflictGraph> geometric(int n, double d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("geometric: n must be >= 1");
    if (d <= 0.0) throw std::invalid_argument("geometric: d must be > 0");
    Rng rng(derive_seed(seed, {0x47454fu}));  // "GEO" stream

    InterferenceNetwork net;
    net.n = n;
    net.tx_pos.reserve(n);
    net.rx_pos.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double tx_x = rng.uniform01(), tx_y = rng.uniform01();
        const double rx_x = rng.uniform01(), rx_y = rng.uniform01();
        net.tx_pos.emplace_back(tx_x, tx_y);
        net.rx_pos.emplace_back(rx_x, rx_y);
    }

    const double d2 = d * d;
    auto within = [&](int tx, int rx) {
        const double dx = net.tx_pos[tx].first - net.rx_pos[rx].first;
        const double dy = net.tx_pos[tx].second - net.rx_pos[rx].second;
        return dx * dx + dy * dy <= d2;
    };

    std::vector<std::pair<UserId, UserId>> edges;
    for (int i = 0; i < n; ++i) {
        net.links.emplace_back(i, i);
        for (int j = 0; j < n; ++j) {
            if (i != j && within(i, j)) net.links.emplace_back(i, j);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (within(i, j) || within(j, i)) edges.emplace_back(i, j);

    return {std::move(net), ConflictGraph(n, edges)};
}

ConflictGraph generate(const GenSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case GraphFamily::line_clique: return line_clique(spec.n);
        case GraphFamily::line_star: return line_star(spec.n);
        case GraphFamily::erdos_renyi: return erdos_renyi(spec.n, spec.p, spec.seed);
        case GraphFamily::barabasi_albert: return barabasi_albert(spec.n, spec.m, spec.seed);
        case GraphFamily::geometric: return geometric(spec.n, spec.d, spec.seed).second;
    }
    throw std::logic_error("unknown family");
}

}  // namespace subsched
