#include <benchmark/benchmark.h>

#include "wreath/simulate.hpp"

namespace {

using namespace wreath;

void BM_SampleStep(benchmark::State& state) {
  const GroupTable g = build_group("S:3");
  const auto n = static_cast<unsigned>(state.range(0));
  Rng rng(1);
  WreathElement x = wreath_identity(n);
  for (auto _ : state) {
    x = sample_step(x, WalkKind::Paired, g, rng);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SampleStep)->Arg(10)->Arg(100);

void BM_CouplingExperiment(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coupling_experiment(n, 100, 7));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_CouplingExperiment)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
