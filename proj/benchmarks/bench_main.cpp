#include <benchmark/benchmark.h>

#include "coarsepaths/coarsepaths.hpp"

namespace cp = coarsepaths;

namespace {

void BM_CyclesLadder(benchmark::State& state) {
  const auto g = cp::ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cp::enumerate_cycles(g));
}
BENCHMARK(BM_CyclesLadder)->DenseRange(4, 10, 2);

void BM_CyclesCactus(benchmark::State& state) {
  const auto g = cp::random_cactus(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cp::enumerate_cycles(g));
}
BENCHMARK(BM_CyclesCactus)->Arg(50)->Arg(200)->Arg(800);

void BM_PathsDoubled(benchmark::State& state) {
  const auto g = cp::doubled_path(static_cast<std::size_t>(state.range(0)));
  std::size_t n = 0;
  for (auto _ : state) {
    const auto paths = cp::enumerate_simple_paths(g);
    n = paths.size();
    benchmark::DoNotOptimize(paths);
  }
  state.counters["paths"] = static_cast<double>(n);
}
BENCHMARK(BM_PathsDoubled)->DenseRange(8, 14, 2);

void BM_PathsGamma(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto g = cp::gamma_kl(cp::k_sequence("squares", t + 1), 2, t);
  for (auto _ : state) benchmark::DoNotOptimize(cp::enumerate_simple_paths(g));
}
BENCHMARK(BM_PathsGamma)->DenseRange(4, 8, 2);

void BM_Metric(benchmark::State& state) {
  // the all-lower and all-upper paths to the far end, so every word differs
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto g = cp::doubled_path(t);
  std::vector<cp::EdgeId> lo, hi;
  for (std::size_t i = 0; i < t; ++i) {
    const auto es = g.edges_between(g.vertex("(" + std::to_string(i) + ",0)"),
                                    g.vertex("(" + std::to_string(i + 1) + ",0)"));
    lo.push_back(es.front());
    hi.push_back(es.back());
  }
  const auto a = cp::path_from_edge_set(g, cp::EdgeSet::from_ids(g.edge_count(), lo));
  const auto b = cp::path_from_edge_set(g, cp::EdgeSet::from_ids(g.edge_count(), hi));
  for (auto _ : state) benchmark::DoNotOptimize(cp::symm_diff_metric(a, b));
}
BENCHMARK(BM_Metric)->Arg(10)->Arg(100)->Arg(1000);

void BM_GrowthProfile(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto space = cp::PathSpace::build(cp::gamma_kl(cp::k_sequence("linear", t + 1), 2, t));
  for (auto _ : state) benchmark::DoNotOptimize(cp::growth_profile(space, 3, 1));
}
BENCHMARK(BM_GrowthProfile)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ControlledLadder(benchmark::State& state) {
  const auto g = cp::ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cp::has_controlled_cycles(g));
}
BENCHMARK(BM_ControlledLadder)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HausdorffDiameter(benchmark::State& state) {
  const auto g = cp::hausdorff_graph(static_cast<std::size_t>(state.range(0)));
  const auto fiber = cp::enumerate_fiber(g, g.vertex("v" + std::to_string(2 * state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cp::hausdorff_diameter(g, fiber));
}
BENCHMARK(BM_HausdorffDiameter)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
