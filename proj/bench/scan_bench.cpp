#include <benchmark/benchmark.h>

#include "randsub/scan.hpp"
#include "randsub/sequence.hpp"

using namespace randsub;

static void BM_ScanRoots(benchmark::State& state) {
  const auto backend = state.range(0) == 0 ? Backend::serial : Backend::openmp;
  for (auto _ : state) benchmark::DoNotOptimize(scan_roots(4, static_cast<unsigned>(state.range(1)), backend));
  state.SetLabel(backend == Backend::serial ? "serial" : "openmp");
}
BENCHMARK(BM_ScanRoots)->ArgsProduct({{0, 1}, {16, 22}})->Unit(benchmark::kMillisecond);

static void BM_ScanQuestion(benchmark::State& state) {
  const auto backend = state.range(0) == 0 ? Backend::serial : Backend::openmp;
  for (auto _ : state) benchmark::DoNotOptimize(scan_question(4, 25, backend));
  state.SetLabel(backend == Backend::serial ? "serial" : "openmp");
}
BENCHMARK(BM_ScanQuestion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ScanConjecture(benchmark::State& state) {
  const auto backend = state.range(0) == 0 ? Backend::serial : Backend::openmp;
  for (auto _ : state) benchmark::DoNotOptimize(scan_conjecture(4, 25, backend));
  state.SetLabel(backend == Backend::serial ? "serial" : "openmp");
}
BENCHMARK(BM_ScanConjecture)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Exact denominators grow with n; the float path stays linear.
static void BM_EvalSequence(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? NumericMode::exact : NumericMode::float64;
  const auto set = make_set({2, 5, 7});
  for (auto _ : state) benchmark::DoNotOptimize(eval_sequence(set, static_cast<std::size_t>(state.range(1)), mode));
  state.SetLabel(mode == NumericMode::exact ? "exact" : "float");
}
BENCHMARK(BM_EvalSequence)->ArgsProduct({{0, 1}, {1000, 4000, 16000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
