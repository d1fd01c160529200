// Serial reference solvers vs the OpenMP kernels, plus the sweeps that
// dominate `sg verify --all`.

#include <benchmark/benchmark.h>

#include "sg/dense.hpp"
#include "sg/verification.hpp"

using namespace sg;

static void BM_DeleteNimReference(benchmark::State& state) {
  const auto bound = static_cast<HeapSize>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dense::solve_delete_nim_reference(bound));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeleteNimReference)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_DeleteNimKernel(benchmark::State& state) {
  const auto bound = static_cast<HeapSize>(state.range(0));
  const dense::KernelConfig config{static_cast<int>(state.range(1)), kDefaultPositionBudget};
  for (auto _ : state) benchmark::DoNotOptimize(dense::solve_delete_nim(bound, config));
}
BENCHMARK(BM_DeleteNimKernel)->ArgsProduct({{32, 64, 128, 256, 1024, 4096}, {1, 0}});

static void BM_VdnReference(benchmark::State& state) {
  const auto bound = static_cast<HeapSize>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dense::solve_vdn_reference(bound));
}
BENCHMARK(BM_VdnReference)->RangeMultiplier(2)->Range(32, 256);

static void BM_VdnKernel(benchmark::State& state) {
  const auto bound = static_cast<HeapSize>(state.range(0));
  const dense::KernelConfig config{static_cast<int>(state.range(1)), kDefaultPositionBudget};
  for (auto _ : state) benchmark::DoNotOptimize(dense::solve_vdn(bound, config));
}
BENCHMARK(BM_VdnKernel)->ArgsProduct({{32, 64, 128, 256}, {1, 0}});

static void BM_DeleteNimFormulaSweep(benchmark::State& state) {
  const SweepConfig config{static_cast<int>(state.range(1)), kDefaultPositionBudget, Backend::dense};
  for (auto _ : state) benchmark::DoNotOptimize(verify_delete_nim_formula(state.range(0), config));
}
BENCHMARK(BM_DeleteNimFormulaSweep)->ArgsProduct({{1024, 4096}, {1, 0}})->Unit(benchmark::kMillisecond);

static void BM_SumTheoremSweep(benchmark::State& state) {
  const SweepConfig config{static_cast<int>(state.range(1)), kDefaultPositionBudget, Backend::generic};
  for (auto _ : state) benchmark::DoNotOptimize(verify_sum_theorem(state.range(0), config));
}
BENCHMARK(BM_SumTheoremSweep)->ArgsProduct({{6, 12}, {1, 0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
