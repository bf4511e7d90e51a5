#include <cmath>

#include <benchmark/benchmark.h>

#include "soliton/quadrature.hpp"

using namespace soliton;

static void BM_Integrate1dPeaked(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  const auto f = [](double x) { return 1.0 / (1.0 + 400.0 * x * x); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_1d(f, -1.0, 1.0, tol).value);
}
BENCHMARK(BM_Integrate1dPeaked)->Arg(6)->Arg(10)->Arg(13);

static void BM_IntegrateRay(benchmark::State& state) {
  const auto f = [](double t) { return std::exp(-t) / std::sqrt(t); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_ray(f, 1.0, 1e-12).value);
}
BENCHMARK(BM_IntegrateRay);

static void BM_IntegrateChartGaussian2d(benchmark::State& state) {
  TruncationPolicy policy;
  policy.x_radius = 8.0;
  policy.y_radius = 8.0;
  const auto g = [](const ChartPoint& p) { return std::exp(-p.x(0) * p.x(0) - p.y() * p.y()); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_chart(g, 2, policy, 1e-9).value);
}
BENCHMARK(BM_IntegrateChartGaussian2d)->Unit(benchmark::kMillisecond);
