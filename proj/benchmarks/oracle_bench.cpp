#include <benchmark/benchmark.h>

#include "wreath/oracle.hpp"

namespace {

using namespace wreath;

void BM_WreathTable(benchmark::State& state) {
  const GroupTable g = build_group("Z:2");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_wreath_table(g, n));
}
BENCHMARK(BM_WreathTable)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExactConvolution(benchmark::State& state) {
  const GroupTable g = build_group("Z:2");
  const auto n = static_cast<unsigned>(state.range(0));
  const GroupTable table = build_wreath_table(g, n);
  const Distribution step = procedural_measure(g, n, OracleWalk::Paired);
  for (auto _ : state) benchmark::DoNotOptimize(convolution_power(table, step, 10));
}
BENCHMARK(BM_ExactConvolution)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForceClasses(benchmark::State& state) {
  const GroupTable g = build_group("Z:3");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_class_count(g, n));
}
BENCHMARK(BM_BruteForceClasses)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
