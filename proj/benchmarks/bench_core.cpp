#include <benchmark/benchmark.h>

#include "bnkit/conjecture.hpp"
#include "bnkit/graph.hpp"
#include "bnkit/multipartite.hpp"
#include "bnkit/search.hpp"
#include "bnkit/spectral.hpp"
#include "bnkit/stability.hpp"

using namespace bnkit;

static void BM_DenseEigenvalues(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseEigenvalues)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

static void BM_CliqueNumberRandom(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumberRandom)->RangeMultiplier(2)->Range(16, 256);

static void BM_CliqueNumberTuran(benchmark::State& state) {
    const Graph g = turan_graph(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumberTuran)->RangeMultiplier(2)->Range(16, 512);

static void BM_SecularSpectrum(benchmark::State& state) {
    std::vector<std::size_t> sizes;
    for (std::int64_t k = 1; k <= state.range(0); ++k) sizes.push_back(static_cast<std::size_t>(k));
    const PartSizes parts(sizes);
    for (auto _ : state) benchmark::DoNotOptimize(multipartite_spectrum(parts));
}
BENCHMARK(BM_SecularSpectrum)->RangeMultiplier(2)->Range(2, 32)->Arg(60);

static void BM_BnReport(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(bn_report(g));
}
BENCHMARK(BM_BnReport)->RangeMultiplier(2)->Range(16, 128);

static void BM_EditDistanceExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = perturbed_turan(n, n / 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(edit_distance_exact(g));
}
BENCHMARK(BM_EditDistanceExact)->DenseRange(6, 12, 3);

static void BM_EditDistanceLocal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = perturbed_turan(n, n / 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(edit_distance_local(g, 20, 6));
}
BENCHMARK(BM_EditDistanceLocal)->RangeMultiplier(2)->Range(12, 96);

BENCHMARK_MAIN();
