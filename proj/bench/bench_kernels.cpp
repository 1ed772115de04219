#include <benchmark/benchmark.h>

#include <omp.h>

#include "pmeqt/monotonicity.hpp"
#include "pmeqt/qt.hpp"
#include "pmeqt/yd.hpp"

using namespace pmeqt;

namespace {

const RateMatrix kTemplate = RateMatrix::from_abcdef(0.8, 0.1, 0.2, 0.9, 0.7, 0.15);

void BM_SweepSerial(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_serial(kTemplate, RateName::a, RateName::e, {0, 5, steps}, {0, 5, steps}));
  }
  state.SetItemsProcessed(state.iterations() * steps * steps);
}

void BM_SweepParallel(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(kTemplate, RateName::a, RateName::e, {0, 5, steps}, {0, 5, steps}));
  }
  state.SetItemsProcessed(state.iterations() * steps * steps);
}

void BM_YDCurveSerial(benchmark::State& state) {
  const YDParams p(1.0, 2.0, 0.5, 0.7);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(yd_curve_serial(p, 0.0, 10.0, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}

void BM_YDCurveParallel(benchmark::State& state) {
  const YDParams p(1.0, 2.0, 0.5, 0.7);
  const int steps = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(yd_curve(p, 0.0, 10.0, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}

void BM_DecomposeNState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = i == j ? 0.0 : 0.1 + 0.07 * ((3 * i + 5 * j) % 11);
  }
  const RateMatrix rates = validate_rates(w);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_nstate(rates));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{100, 400}, {1, 2, 4}})->UseRealTime();
BENCHMARK(BM_YDCurveSerial)->Arg(10000)->Arg(1000000);
BENCHMARK(BM_YDCurveParallel)->ArgsProduct({{10000, 1000000}, {1, 2, 4}})->UseRealTime();
BENCHMARK(BM_DecomposeNState)->DenseRange(3, 6);

BENCHMARK_MAIN();
