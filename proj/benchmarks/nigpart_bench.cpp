#include <benchmark/benchmark.h>

#include "matrix_suite.hpp"
#include "nigpart/nig.hpp"
#include "nigpart/rb_partitioner.hpp"
#include "nigpart/separator.hpp"

using namespace nigpart;

static Hypergraph grid(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  return column_net_model(testing::laplacian_2d(n, n));
}

static void BM_BuildNig(benchmark::State& state) {
  Hypergraph h = grid(state);
  NigOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_nig(h, opts));
  state.counters["pins"] = static_cast<double>(h.num_pins());
}
BENCHMARK(BM_BuildNig)->Args({64, 1})->Args({142, 1})->Args({142, 4})->Unit(benchmark::kMillisecond);

static void BM_FindSeparator(benchmark::State& state) {
  Hypergraph h = grid(state);
  NigGraph nig = build_nig(h);
  GpvsConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(find_separator(nig.graph, cfg));
  state.counters["nig_edges"] = static_cast<double>(nig.graph.num_edges());
}
BENCHMARK(BM_FindSeparator)->Arg(64)->Arg(142)->Unit(benchmark::kMillisecond);

static void BM_Partition(benchmark::State& state) {
  Hypergraph h = grid(state);
  RbConfig cfg;
  cfg.k = static_cast<PartId>(state.range(1));
  cfg.threads = static_cast<int>(state.range(2));
  Weight cut = 0;
  for (auto _ : state) {
    PartitionResult res = partition(h, cfg);
    cut = res.report.connectivity_minus1_cost;
  }
  state.counters["conn"] = static_cast<double>(cut);
}
BENCHMARK(BM_Partition)
    ->Args({142, 8, 1})
    ->Args({142, 64, 1})
    ->Args({142, 64, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
