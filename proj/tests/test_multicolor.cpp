#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "subsched/generators.hpp"
#include "subsched/multicolor.hpp"
#include "subsched/rng.hpp"
#include "subsched/selection.hpp"

using namespace subsched;

namespace {
ConsolidatedGraph singleton_graph(const ConflictGraph& g) {
    std::vector<CliqueVertex> singles;
    for (UserId v = 0; v < g.num_vertices(); ++v) singles.push_back({{v}, 0});
    return build_temp_graph(g, singles);
}
}  // namespace

TEST_SUITE("scheduler") {

TEST_CASE("kuhn_k formula") {
    // ceil(6*51*ln 50 / 0.09) = ceil(13300.878...) = 13301
    CHECK(kuhn_k(50, 0.3) == 13301);
    // ceil(6*3*ln 2 / 0.9801) = ceil(12.729...) = 13
    CHECK(kuhn_k(2, 0.99) == 13);
    CHECK_THROWS_AS(kuhn_k(1, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(kuhn_k(10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kuhn_k(10, 1.0), std::invalid_argument);
}

TEST_CASE("kuhn_k scales as one over eps squared") {
    for (int nbar : {10, 50, 200}) {
        const int k1 = kuhn_k(nbar, 0.4);
        const int k2 = kuhn_k(nbar, 0.2);
        CHECK(k2 >= 4 * k1 - 4);  // rounding slack
        CHECK(k2 <= 4 * k1 + 4);
    }
}

TEST_CASE("draw_vectors determinism, range and independence from order") {
    const int k = 64, nbar = 40;
    const auto a = draw_vectors(10, k, nbar, 99);
    const auto b = draw_vectors(10, k, nbar, 99);
    REQUIRE(a.size() == 10);
    for (int u = 0; u < 10; ++u) CHECK(a[u].values == b[u].values);

    // drawing a prefix of the users yields the same per-user streams
    const auto prefix = draw_vectors(3, k, nbar, 99);
    for (int u = 0; u < 3; ++u) CHECK(prefix[u].values == a[u].values);

    const ColorValue bound = ColorValue(k) * ColorValue(nbar) * ColorValue(nbar) *
                             ColorValue(nbar) * ColorValue(nbar);
    for (const auto& vec : a) {
        REQUIRE(vec.values.size() == std::size_t(k));
        for (ColorValue v : vec.values) {
            CHECK(v >= 1);
            CHECK(v <= bound);
        }
    }
    CHECK_THROWS_AS(draw_vectors(50, k, 40, 1), std::invalid_argument);  // n > Nbar
}

TEST_CASE("paired entries collide at roughly 1/(k Nbar^4)") {
    // with Nbar = 2 the entry space has k*16 values; count collisions across
    // a pair of users over many slots and compare against the expectation
    const int k = 20000, nbar = 2;
    const auto vecs = draw_vectors(2, k, nbar, 7);
    int collisions = 0;
    for (int i = 0; i < k; ++i) collisions += vecs[0].values[i] == vecs[1].values[i];
    const double expect = double(k) / (double(k) * 16.0);  // k slots, p = 1/(k*16)
    CHECK(collisions <= 10 * std::max(1.0, expect));  // ~0.06 expected; allow rare hits
}

TEST_CASE("clique vectors take the smallest member id") {
    const ConflictGraph g = line_clique(6);
    const auto sel = aggressive_centralized(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
    const auto user_vecs = draw_vectors(6, 16, 10, 3);
    const auto vertex_vecs = assign_clique_vectors(sel.consolidated, user_vecs);
    for (int i = 0; i < sel.consolidated.num_vertices(); ++i) {
        const UserId min_member = sel.consolidated.vertices[i].members.front();
        CHECK(vertex_vecs[i].values == user_vecs[min_member].values);
    }
}

TEST_CASE("isolated vertex acquires everything") {
    const ConflictGraph g(1, {});
    const ConsolidatedGraph cg = singleton_graph(g);
    const auto assign = multicolor(cg, draw_vectors(1, 32, 10, 5));
    CHECK(assign.acquired[0].size() == 32);
}

TEST_CASE("two adjacent vertices split the slots complementarily") {
    const ConflictGraph g(2, {{0, 1}});
    const ConsolidatedGraph cg = singleton_graph(g);
    const int k = 4096;
    const auto assign = multicolor(cg, draw_vectors(2, k, 10, 17));
    const std::size_t total = assign.acquired[0].size() + assign.acquired[1].size();
    CHECK(total == std::size_t(k));  // ties are broken, never dropped
    // each side wins about half; 3 sigma of Binomial(k, 1/2) is ~96
    CHECK(std::abs(double(assign.acquired[0].size()) - k / 2.0) < 3.0 * std::sqrt(k / 4.0) + 1);
    CHECK(verify_proper_coloring(cg, assign) == std::nullopt);
}

TEST_CASE("triangle guarantee at eps = 0.3") {
    const ConflictGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    const ConsolidatedGraph cg = singleton_graph(g);
    const double eps = 0.3;
    const int k = kuhn_k(3, eps);
    int ok = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const auto assign = multicolor(cg, draw_vectors(3, k, 3, derive_seed(1000, {std::uint64_t(t)})));
        bool all = true;
        for (int w = 0; w < 3; ++w)
            all = all && assign.acquired[w].size() >= std::size_t((1.0 - eps) * k / 3.0);
        ok += all;
    }
    CHECK(ok >= 95);
}

TEST_CASE("coloring is proper on consolidated graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ConflictGraph g = erdos_renyi(14, 0.3, derive_seed(2, {seed}));
        const auto sel = aggressive_centralized(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
        const auto vecs = draw_vectors(g.num_vertices(), 256, 20, seed);
        const auto assign = multicolor(sel.consolidated, assign_clique_vectors(sel.consolidated, vecs));
        CHECK(verify_proper_coloring(sel.consolidated, assign) == std::nullopt);
    }
}

TEST_CASE("identical vectors break ties by member order, keeping properness") {
    // two adjacent cliques sharing their smallest member receive equal
    // vectors; the lexicographically earlier member list wins every slot
    const ConflictGraph g(3, {{0, 1}, {0, 2}});
    const ConsolidatedGraph cg = build_temp_graph(g, {{{0, 1}, 1}, {{0, 2}, 1}});
    const auto assign = multicolor(cg, assign_clique_vectors(cg, draw_vectors(3, 64, 10, 9)));
    CHECK(verify_proper_coloring(cg, assign) == std::nullopt);
    CHECK(assign.acquired[0].size() == 64);
    CHECK(assign.acquired[1].empty());
}

TEST_CASE("acquisition is locally computable") {
    const ConflictGraph g = erdos_renyi(12, 0.35, 77);
    const auto sel = aggressive_centralized(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
    const auto vecs = assign_clique_vectors(sel.consolidated, draw_vectors(12, 128, 15, 3));
    const auto assign = multicolor(sel.consolidated, vecs);

    // recompute each vertex's set from its 1-neighborhood alone
    const ConsolidatedGraph& cg = sel.consolidated;
    for (int w = 0; w < cg.num_vertices(); ++w) {
        std::vector<int> idx{w};
        for (int z : cg.adj[w]) idx.push_back(z);
        std::sort(idx.begin(), idx.end());
        ConsolidatedGraph star;
        star.origin_n = cg.origin_n;
        std::vector<int> pos(cg.num_vertices(), -1);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            pos[idx[i]] = static_cast<int>(i);
            star.vertices.push_back(cg.vertices[idx[i]]);
        }
        star.adj.assign(idx.size(), {});
        const int local_w = pos[w];
        for (int z : cg.adj[w]) {
            star.adj[local_w].push_back(pos[z]);
            star.adj[pos[z]].push_back(local_w);
        }
        for (auto& nbrs : star.adj) std::sort(nbrs.begin(), nbrs.end());
        std::vector<ColorVector> star_vecs;
        for (int i : idx) star_vecs.push_back(vecs[i]);
        const auto local_assign = multicolor(star, star_vecs);
        CHECK(local_assign.acquired[local_w] == assign.acquired[w]);
    }
}

TEST_CASE("deterministic under fixed seed and graph") {
    const ConflictGraph g = erdos_renyi(10, 0.5, 41);
    const auto sel = aggressive_centralized(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
    const auto a = multicolor(sel.consolidated,
                              assign_clique_vectors(sel.consolidated, draw_vectors(10, 100, 12, 8)));
    const auto b = multicolor(sel.consolidated,
                              assign_clique_vectors(sel.consolidated, draw_vectors(10, 100, 12, 8)));
    CHECK(a.acquired == b.acquired);
}

}  // TEST_SUITE
