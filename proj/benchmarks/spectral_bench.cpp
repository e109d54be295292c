#include <benchmark/benchmark.h>

#include "wreath/bounds.hpp"
#include "wreath/content_profile.hpp"
#include "wreath/walks.hpp"
#include "wreath/wreath_reps.hpp"

namespace {

using namespace wreath;

void BM_Spectrum(benchmark::State& state) {
  const GroupTable g = build_group(state.range(0) == 0 ? "Z:2" : "S:3");
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g, n, WalkKind::Paired));
}
BENCHMARK(BM_Spectrum)->Args({0, 6})->Args({0, 10})->Args({1, 4})->Args({1, 6})->Unit(benchmark::kMillisecond);

void BM_EnumerateLabels(benchmark::State& state) {
  const GroupTable g = build_group("Z:3");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_labels(g, n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(class_count(g, n).get_si()));
}
BENCHMARK(BM_EnumerateLabels)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CollapsedL2(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const unsigned long k = static_cast<unsigned long>(0.5 * n * std::log(n)) + n;
  l2n_sq_collapsed(BigInt(2), n, k);  // builds and caches every profile up to n
  for (auto _ : state) benchmark::DoNotOptimize(l2n_sq_collapsed(BigInt(2), n, k));
}
BENCHMARK(BM_CollapsedL2)->Arg(30)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ContentProfileBuild(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_content_profile(m));
}
BENCHMARK(BM_ContentProfileBuild)->Arg(40)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PairedRelaxedBound(benchmark::State& state) {
  const GroupTable g = build_group("S:3");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paired_relaxed_bound(g, n, 4 * n));
}
BENCHMARK(BM_PairedRelaxedBound)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
