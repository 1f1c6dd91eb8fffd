#include <benchmark/benchmark.h>

#include "forcelab/classifier.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/formulas.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/throttle.hpp"

using namespace forcelab;

static void BM_PropagatePsdPath(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen::path(n);
    const VertexSet s = witness_path(n);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(g, s, Rule::PSD));
}
BENCHMARK(BM_PropagatePsdPath)->Arg(16)->Arg(64)->Arg(256)->Arg(512);

static void BM_PropagateStandardGrid(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Graph g = gen::cartesian_product(gen::path(k), gen::path(k));
    VertexSet s;
    for (Vertex v = 0; v < k; ++v) s.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(g, s, Rule::Standard));
}
BENCHMARK(BM_PropagateStandardGrid)->Arg(8)->Arg(16)->Arg(22);

static void BM_ThrottlePath(benchmark::State& state) {
    const Graph g = gen::path(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(throttle_exact(g, Rule::PSD));
}
BENCHMARK(BM_ThrottlePath)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_ThrottleStandardCycle(benchmark::State& state) {
    const Graph g = gen::cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(throttle_exact(g, Rule::Standard));
}
BENCHMARK(BM_ThrottleStandardCycle)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);

static void BM_ThrottleLadder(benchmark::State& state) {
    const Graph g = gen::cartesian_product(gen::path(10), gen::path(2));
    for (auto _ : state) benchmark::DoNotOptimize(throttle_exact(g, Rule::PSD));
}
BENCHMARK(BM_ThrottleLadder)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
    const Graph g = gen::double_diamond();
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify);
BENCHMARK_MAIN();
