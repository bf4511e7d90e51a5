#include <benchmark/benchmark.h>

#include "soliton/geometry.hpp"
#include "soliton/soliton.hpp"

using namespace soliton;

static void BM_SolitonConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Soliton(SolitonParams{}).scalars().oscillation);
}
BENCHMARK(BM_SolitonConstruction)->Unit(benchmark::kMillisecond);

static void BM_Frame(benchmark::State& state) {
  SolitonParams params;
  if (state.range(0) == 3) {
    params.n = 3;
    params.a = {1.0, 2.0};
  }
  const Soliton s(params);
  const ChartPoint p = params.n == 2 ? ChartPoint({0.7}, 1.3) : ChartPoint({0.7, -0.2}, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(s.frame(p).area_density);
}
BENCHMARK(BM_Frame)->Arg(2)->Arg(3);

static void BM_HEqualsJGradTheta(benchmark::State& state) {
  const Soliton s{SolitonParams{}};
  const JetImmersion imm = s.jet_immersion();
  for (auto _ : state) benchmark::DoNotOptimize(h_equals_j_grad_theta_residual(imm, ChartPoint({0.5}, 1.0), 1e-5));
}
BENCHMARK(BM_HEqualsJGradTheta);
