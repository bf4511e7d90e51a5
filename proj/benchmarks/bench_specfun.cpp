#include <benchmark/benchmark.h>

#include "soliton/specfun.hpp"

using namespace soliton;

static void BM_BesselKScaled(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k_scaled(BesselOrder(0.0), z, 1e-12));
}
BENCHMARK(BM_BesselKScaled)->Arg(1)->Arg(10)->Arg(100);

static void BM_BesselKCrossChecked(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k(BesselOrder(1.0), 2.0, 1e-10, true));
}
BENCHMARK(BM_BesselKCrossChecked);

static void BM_UpperGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(upper_gamma(GammaArgs(0.5, 0.3)));
}
BENCHMARK(BM_UpperGamma);
