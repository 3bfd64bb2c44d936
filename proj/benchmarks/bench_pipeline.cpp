#include <benchmark/benchmark.h>

#include "subsched/experiment.hpp"
#include "subsched/metrics.hpp"

using namespace subsched;

namespace {

void BM_EnumerateCliquesLine(benchmark::State& state) {
    const ConflictGraph g = line_clique(static_cast<int>(state.range(0)));
    const int rho = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_r_cliques(g, rho));
}
BENCHMARK(BM_EnumerateCliquesLine)->Args({50, 1})->Args({50, 2})->Args({50, 3});

void BM_EnumerateCliquesRandom(benchmark::State& state) {
    const ConflictGraph g = erdos_renyi(static_cast<int>(state.range(0)), 0.2, 7);
    const int rho = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_r_cliques(g, rho));
}
BENCHMARK(BM_EnumerateCliquesRandom)->Args({30, 1})->Args({15, 2});

void BM_AggressiveSelect(benchmark::State& state) {
    const ConflictGraph g = erdos_renyi(static_cast<int>(state.range(0)), 0.3, 11);
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, 1));
    for (auto _ : state) benchmark::DoNotOptimize(aggressive_centralized(temp, g, 1));
}
BENCHMARK(BM_AggressiveSelect)->Arg(20)->Arg(40);

void BM_ConservativeSelect(benchmark::State& state) {
    const ConflictGraph g = erdos_renyi(static_cast<int>(state.range(0)), 0.3, 11);
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, 1));
    for (auto _ : state) benchmark::DoNotOptimize(conservative_select(temp, g, 1));
}
BENCHMARK(BM_ConservativeSelect)->Arg(20)->Arg(40);

void BM_Multicolor(benchmark::State& state) {
    const ConflictGraph g = erdos_renyi(30, 0.3, 13);
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, 1));
    const SelectionResult sel = aggressive_centralized(temp, g, 1);
    const int k = static_cast<int>(state.range(0));
    const auto vectors = draw_vectors(g.num_vertices(), k, 50, 17);
    const auto vertex_vectors = assign_clique_vectors(sel.consolidated, vectors);
    for (auto _ : state) benchmark::DoNotOptimize(multicolor(sel.consolidated, vertex_vectors));
}
BENCHMARK(BM_Multicolor)->Arg(1000)->Arg(5000);

void BM_FullPipeline(benchmark::State& state) {
    ExperimentConfig cfg;
    GenSpec spec;
    spec.family = GraphFamily::erdos_renyi;
    spec.n = 20;
    spec.p = 0.5;
    cfg.gen = spec;
    cfg.rho = {1};
    cfg.algorithms = {Algorithm::dc, Algorithm::conservative, Algorithm::aggressive};
    cfg.replications = 5;
    cfg.record_runtime_ms = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}
BENCHMARK(BM_FullPipeline);

}  // namespace

BENCHMARK_MAIN();
