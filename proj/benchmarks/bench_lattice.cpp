#include "slspec/instance.hpp"
#include "slspec/spectra.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace slspec;

namespace {

// "Zn | (0),...,(0)" with `rank` free summands.
std::string free_module(int n, int rank) {
  std::string text = "Z" + std::to_string(n) + " | (0)";
  for (int i = 1; i < rank; ++i) text += ",(0)";
  return text;
}

}  // namespace

static void BM_EnumerateSubmodulesZ8(benchmark::State& state) {
  const auto m = load_instance(free_module(8, static_cast<int>(state.range(0)))).module;
  std::size_t count = 0;
  for (auto _ : state) {
    auto lattice = enumerate_submodules(m);
    count = lattice.size();
    benchmark::DoNotOptimize(lattice);
  }
  state.counters["submodules"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSubmodulesZ8)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSubmodulesF2(benchmark::State& state) {
  const auto m = load_instance(free_module(2, static_cast<int>(state.range(0)))).module;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(m));
}
BENCHMARK(BM_EnumerateSubmodulesF2)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_ModuleSpectra(benchmark::State& state) {
  static const char* instances[] = {"Z60 | (0)", "Z4xZ9 | (0,0),(2,3)", "Z8 | (0),(0),(0)", "Z2xZ3 | (0,0),(0,0),(0,0)"};
  const auto m = load_instance(instances[state.range(0)]).module;
  for (auto _ : state) benchmark::DoNotOptimize(ModuleSpectra(m));
  state.SetLabel(instances[state.range(0)]);
}
BENCHMARK(BM_ModuleSpectra)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_ParseAndBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_instance("Z6xZ10 | (0,0),(2,5)"));
}
BENCHMARK(BM_ParseAndBuild);
