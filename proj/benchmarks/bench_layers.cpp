#include "maxlayers/maxlayers.hpp"

#include <benchmark/benchmark.h>

using namespace maxlayers;

namespace {

auto make(GeneratorKind kind, std::size_t n, std::size_t k) -> PointSet
{
    GeneratorSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.k = k;
    spec.seed = kDefaultSeed;
    return generate(spec);
}

template <GeneratorKind Kind, Mode M>
void BM_MaxPartition(benchmark::State& state)
{
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const k = static_cast<std::size_t>(state.range(1));
    auto const points = make(Kind, n, k);
    std::uint64_t comparisons = 0;
    for (auto _ : state) {
        auto result = max_partition(points, M, kDefaultSeed);
        comparisons = result.metrics.coordinate_comparisons;
        benchmark::DoNotOptimize(result);
    }
    state.counters["comparisons"] = static_cast<double>(comparisons);
    state.SetComplexityN(state.range(0));
}

void BM_OracleLayers(benchmark::State& state)
{
    auto const points = make(GeneratorKind::RandomOrder, static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_layers(points));
    }
    state.SetComplexityN(state.range(0));
}

// Unsuccessful above-queries against one tree holding a whole layer.
void BM_HstAboveMiss(benchmark::State& state)
{
    auto const w = static_cast<std::size_t>(state.range(0));
    auto const k = static_cast<std::size_t>(state.range(1));
    auto const layer = antichain_on_simplex(w, k, 1);
    auto const pts = layer.points();
    Rng rng(2);
    auto const tree = bulk_build(pts, k, rng, nullptr, false);
    auto const probes = antichain_on_simplex(256, k, 3);
    std::size_t i = 0;
    QueryMetrics m;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree.above(probes[i++ % probes.size()], m));
    }
    state.counters["visits_per_query"] =
        benchmark::Counter(static_cast<double>(m.nodes_visited), benchmark::Counter::kAvgIterations);
}

void partition_args(benchmark::internal::Benchmark* b)
{
    for (std::int64_t k : {2, 4, 8}) {
        for (std::int64_t n = 256; n <= 4096; n *= 4) {
            b->Args({n, k});
        }
    }
}

} // namespace

BENCHMARK(BM_MaxPartition<GeneratorKind::RandomOrder, Mode::Hst>)->Apply(partition_args);
BENCHMARK(BM_MaxPartition<GeneratorKind::RandomOrder, Mode::ListHst>)->Apply(partition_args);
BENCHMARK(BM_MaxPartition<GeneratorKind::Antichain, Mode::ListHst>)->Apply(partition_args);
BENCHMARK(BM_MaxPartition<GeneratorKind::Chain, Mode::ListHst>)->Apply(partition_args);
BENCHMARK(BM_OracleLayers)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_HstAboveMiss)->ArgsProduct({{64, 256, 1024, 4096}, {4, 8}});
BENCHMARK_MAIN();
