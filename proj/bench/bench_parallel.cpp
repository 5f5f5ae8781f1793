// Serial reference vs OpenMP paths: per-shape Hankel ranks and property sweeps.

#include <benchmark/benchmark.h>

#include <vector>

#include "qhankel/hankel.hpp"
#include "qhankel/random.hpp"
#include "qhankel/selfcheck.hpp"

using namespace qhankel;

namespace {

// Dense random sequences of exactly n terms; m = ceil(n/2) so every shape
// has nontrivial rank.
QSequence dense_sequence(std::size_t n) {
  Rng rng(n);
  std::vector<Quaternion> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_nonzero_quaternion(rng, 5));
  return QSequence(std::move(v));
}

void BM_AnalyzeSerial(benchmark::State& state) {
  const QSequence h = dense_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_serial(h));
}

void BM_AnalyzeParallel(benchmark::State& state) {
  const QSequence h = dense_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(h));
}

void sweep(benchmark::State& state, Execution execution) {
  SelfCheckOptions opt;
  opt.execution = execution;
  opt.sizes = SweepSizes{}.scaled(0.25);
  for (auto _ : state) benchmark::DoNotOptimize(run_property("hankel_rank_formula", opt));
}

void BM_SweepSerial(benchmark::State& state) { sweep(state, Execution::Serial); }
void BM_SweepParallel(benchmark::State& state) { sweep(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_AnalyzeSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeParallel)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
