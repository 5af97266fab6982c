#include "slspec/corpus.hpp"
#include "slspec/report.hpp"

#include <benchmark/benchmark.h>

using namespace slspec;

static void BM_VerifyAllZ12(benchmark::State& state) {
  const auto m = load_instance("Z12 | (0),(6)").module;
  for (auto _ : state) {
    InstanceVerifier v(m);
    benchmark::DoNotOptimize(v.verify_all(result_registry()));
  }
}
BENCHMARK(BM_VerifyAllZ12)->Unit(benchmark::kMillisecond);

static void BM_CyclicCorpus(benchmark::State& state) {
  const auto spec = parse_corpus("cyclic " + std::to_string(state.range(0)) + "\n");
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(spec));
  state.counters["instances"] = static_cast<double>(spec.instances.size());
}
BENCHMARK(BM_CyclicCorpus)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_AnalysisDocument(benchmark::State& state) {
  const auto built = load_instance("Z8 | (0),(0),(0)");
  for (auto _ : state) benchmark::DoNotOptimize(json_text(analysis_document(built)));
}
BENCHMARK(BM_AnalysisDocument)->Unit(benchmark::kMillisecond);
