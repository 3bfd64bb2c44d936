#include "subsched/multicolor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subsched/rng.hpp"

namespace subsched {

namespace {
constexpr std::uint64_t kVectorStage = 0x564543u;  // "VEC"
}

int kuhn_k(int nbar, double eps) {
    if (nbar < 2) throw std::invalid_argument("kuhn_k: Nbar must be >= 2");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("kuhn_k: eps must lie in (0,1)");
    const double k = std::ceil(6.0 * (nbar + 1) * std::log(double(nbar)) / (eps * eps));
    if (!(k >= 1.0) || k > 2e9) throw std::invalid_argument("kuhn_k: slot count out of range");
    return static_cast<int>(k);
}

std::vector<ColorVector> draw_vectors(int n_users, int k, int nbar, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("draw_vectors: k must be >= 1");
    if (nbar < 2) throw std::invalid_argument("draw_vectors: Nbar must be >= 2");
    if (n_users > nbar)
        throw std::invalid_argument("draw_vectors: n exceeds the assumed bound Nbar");
    // k * Nbar^4 must fit 128 bits
    if (4.0 * std::log2(double(nbar)) + std::log2(double(k)) >= 126.0)
        throw std::invalid_argument("draw_vectors: k * Nbar^4 overflows the entry width");
    const ColorValue nb = ColorValue(std::uint64_t(nbar));
    const ColorValue bound = ColorValue(std::uint64_t(k)) * nb * nb * nb * nb;

    std::vector<ColorVector> out(std::max(n_users, 0));
    for (int u = 0; u < n_users; ++u) {
        Rng rng(derive_seed(seed, {kVectorStage, std::uint64_t(u)}));
        out[u].values.resize(k);
        for (int i = 0; i < k; ++i) out[u].values[i] = 1 + rng.bounded_u128(bound);
    }
    return out;
}

std::vector<ColorVector> assign_clique_vectors(const ConsolidatedGraph& cg,
                                               const std::vector<ColorVector>& user_vectors) {
    std::vector<ColorVector> out(cg.num_vertices());
    for (int i = 0; i < cg.num_vertices(); ++i) {
        const UserId min_member = cg.vertices[i].members.front();
        if (min_member < 0 || std::size_t(min_member) >= user_vectors.size() ||
            user_vectors[min_member].values.empty())
            throw std::invalid_argument("assign_clique_vectors: no vector for user " +
                                        std::to_string(min_member + 1));
        out[i] = user_vectors[min_member];
    }
    return out;
}

ColorAssignment multicolor(const ConsolidatedGraph& cg, const std::vector<ColorVector>& vertex_vectors) {
    if (vertex_vectors.size() != std::size_t(cg.num_vertices()))
        throw std::invalid_argument("multicolor: one vector per vertex required");
    const int k = cg.num_vertices() ? static_cast<int>(vertex_vectors.front().values.size()) : 0;
    for (const ColorVector& v : vertex_vectors)
        if (static_cast<int>(v.values.size()) != k)
            throw std::invalid_argument("multicolor: vectors must share one length k");

    auto precedes = [&](int a, int b) {  // tie order
        return cg.vertices[a].members < cg.vertices[b].members;
    };

    ColorAssignment assign;
    assign.k = k;
    assign.acquired.assign(cg.num_vertices(), {});
    for (int w = 0; w < cg.num_vertices(); ++w) {
        for (int i = 0; i < k; ++i) {
            bool wins = true;
            for (int z : cg.adj[w]) {
                const ColorValue lw = vertex_vectors[w].values[i];
                const ColorValue lz = vertex_vectors[z].values[i];
                if (lw > lz || (lw == lz && !precedes(w, z))) { wins = false; break; }
            }
            if (wins) assign.acquired[w].push_back(i);
        }
    }
    return assign;
}

std::optional<std::string> verify_proper_coloring(const ConsolidatedGraph& cg,
                                                  const ColorAssignment& assign) {
    for (int a = 0; a < cg.num_vertices(); ++a) {
        for (int b : cg.adj[a]) {
            if (b < a) continue;
            std::vector<int> common;
            std::set_intersection(assign.acquired[a].begin(), assign.acquired[a].end(),
                                  assign.acquired[b].begin(), assign.acquired[b].end(),
                                  std::back_inserter(common));
            if (!common.empty())
                return "adjacent vertices " + std::to_string(a) + " and " + std::to_string(b) +
                       " share slot " + std::to_string(common.front() + 1);
        }
    }
    return std::nullopt;
}

}  // namespace subsched
