#include <benchmark/benchmark.h>

#include "antimagic/approx_magic.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/search.hpp"

using namespace antimagic;

namespace {

// A trailing K2 component can never get distinct sums, so the search has to
// exhaust every labeling of the cycle edges first.
Graph search_target() {
    const std::vector<Graph> parts{cycle_graph(8), complete_graph(2)};
    return disjoint_union(parts);
}

void BM_BruteForceSerial(benchmark::State& state) {
    const Graph g = search_target();
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_antimagic_serial(g, 20));
}

void BM_BruteForceParallel(benchmark::State& state) {
    const Graph g = search_target();
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_antimagic(g, 20));
}

void BM_MinDeltaSerial(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_delta_serial(g, 20));
}

void BM_MinDeltaParallel(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_delta(g, 20));
}

void BM_VertexSumsSerial(benchmark::State& state) {
    const Graph g = random_regular_graph(static_cast<std::size_t>(state.range(0)), 4, 1);
    const Labeling lab = label_approx_magic(g).labeling;
    for (auto _ : state) benchmark::DoNotOptimize(vertex_sums_serial(g, lab));
}

void BM_VertexSumsParallel(benchmark::State& state) {
    const Graph g = random_regular_graph(static_cast<std::size_t>(state.range(0)), 4, 1);
    const Labeling lab = label_approx_magic(g).labeling;
    for (auto _ : state) benchmark::DoNotOptimize(vertex_sums(g, lab));
}

}  // namespace

BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDeltaSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDeltaParallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VertexSumsSerial)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_VertexSumsParallel)->Arg(1 << 14)->Arg(1 << 18);

BENCHMARK_MAIN();
