#include <benchmark/benchmark.h>

#include "chomp/analysis.hpp"
#include "chomp/solver.hpp"
#include "chomp/store.hpp"

using namespace chomp;

namespace {

SolveConfig config(int n_max, int threads, Strategy strategy) {
  SolveConfig cfg;
  cfg.n_max = n_max;
  cfg.thread_count = threads;
  cfg.strategy = strategy;
  return cfg;
}

void BM_SolveLineIndex(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Strategy::line_index);
  for (auto _ : state) benchmark::DoNotOptimize(solve(cfg).count());
}
BENCHMARK(BM_SolveLineIndex)->Args({40, 1})->Args({40, 4})->Args({80, 1})->Args({80, 4})->Unit(benchmark::kMillisecond);

void BM_SolveMoveScan(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Strategy::move_scan);
  for (auto _ : state) benchmark::DoNotOptimize(solve(cfg).count());
}
BENCHMARK(BM_SolveMoveScan)->Args({40, 1})->Args({40, 4})->Unit(benchmark::kMillisecond);

void BM_SolveReference(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), 1, Strategy::move_scan);
  for (auto _ : state) benchmark::DoNotOptimize(solve_reference(cfg).count());
}
BENCHMARK(BM_SolveReference)->Arg(40)->Unit(benchmark::kMillisecond);

const std::vector<std::uint32_t>& dseq() {
  static const auto seq = store::d_sequence(solve(config(100, 1, Strategy::line_index))).values;
  return seq;
}

void BM_AutocorrSerial(benchmark::State& state) {
  const auto& seq = dseq();
  for (auto _ : state) benchmark::DoNotOptimize(analysis::d_autocorrelation_serial(seq, 336).r.data());
}
BENCHMARK(BM_AutocorrSerial)->Unit(benchmark::kMillisecond);

void BM_AutocorrOmp(benchmark::State& state) {
  const auto& seq = dseq();
  for (auto _ : state) benchmark::DoNotOptimize(analysis::d_autocorrelation(seq, 336).r.data());
}
BENCHMARK(BM_AutocorrOmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
