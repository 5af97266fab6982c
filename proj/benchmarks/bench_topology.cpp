#include "slspec/instance.hpp"
#include "slspec/maps.hpp"
#include "slspec/topology.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace slspec;

static void BM_BuildSLSpace(benchmark::State& state) {
  const ModuleSpectra sp(load_instance("Z4xZ9 | (0,0),(2,3)").module);
  for (auto _ : state) benchmark::DoNotOptimize(build_space(sp, SpaceKind::SecondaryLike));
}
BENCHMARK(BM_BuildSLSpace)->Unit(benchmark::kMicrosecond);

static void BM_ClosureRandomSubsets(benchmark::State& state) {
  const ModuleSpectra sp(load_instance("Z36 | (0),(6)").module);
  const auto t = build_space(sp, SpaceKind::SecondaryLike);
  std::mt19937_64 rng(1);
  std::vector<PointSet> ys;
  for (int k = 0; k < 64; ++k) {
    PointSet y(t.size());
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (rng() & 1) y.set(p);
    }
    ys.push_back(std::move(y));
  }
  for (auto _ : state) {
    for (const auto& y : ys) benchmark::DoNotOptimize(t.closure(y));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
}
BENCHMARK(BM_ClosureRandomSubsets);

static void BM_SecondaryCotop(benchmark::State& state) {
  const ModuleSpectra sp(load_instance("Z8 | (0),(0),(0)").module);
  for (auto _ : state) benchmark::DoNotOptimize(is_secondary_cotop(sp));
}
BENCHMARK(BM_SecondaryCotop)->Unit(benchmark::kMillisecond);

static void BM_PhiMapReport(benchmark::State& state) {
  const ModuleSpectra sp(load_instance("Z8 | (0),(0),(0)").module);
  for (auto _ : state) benchmark::DoNotOptimize(map_report(phi_map(sp)));
}
BENCHMARK(BM_PhiMapReport)->Unit(benchmark::kMicrosecond);
