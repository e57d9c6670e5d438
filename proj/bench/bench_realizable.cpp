// Compares the bit-parallel enumeration kernel against the serial
// adjacency-matrix reference on identical inputs. Run with
// --benchmark_min_time=... to tighten timings.

#include "ergm/graphspace.hpp"
#include "ergm/reference.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<ergm::StatisticSpec> edges_triangles() {
    return {ergm::make_spec(ergm::StatKind::Edges), ergm::make_spec(ergm::StatKind::Triangles)};
}

void BM_kernel(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    auto specs = edges_triangles();
    for (auto _ : state) {
        auto set = ergm::realizable_set(k, specs);
        benchmark::DoNotOptimize(set.points.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(ergm::graph_count(k)));
}

void BM_reference(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    auto specs = edges_triangles();
    for (auto _ : state) {
        auto set = ergm::reference::realizable_set(k, specs);
        benchmark::DoNotOptimize(set.points.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(ergm::graph_count(k)));
}

}  // namespace

BENCHMARK(BM_kernel)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
