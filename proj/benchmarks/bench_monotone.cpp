#include <benchmark/benchmark.h>

#include "soliton/monotone.hpp"
#include "soliton/soliton.hpp"

using namespace soliton;

namespace {

const Soliton& standard() {
  static const Soliton s{SolitonParams{}};
  return s;
}

}  // namespace

static void BM_NecessaryLhs(benchmark::State& state) {
  const FDeltaParams p = FDeltaParams::for_oscillation(1e-2, standard().scalars().oscillation);
  for (auto _ : state) benchmark::DoNotOptimize(necessary_lhs(standard(), {}, p, 1e-7).value);
}
BENCHMARK(BM_NecessaryLhs)->Unit(benchmark::kMillisecond);

static void BM_PhiF(benchmark::State& state) {
  KernelArgs k;
  k.x0 = AmbientPoint{Eigen::VectorXd::Zero(4)};
  k.t = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_f(standard(), [](double th) { return th * th; }, k, 1e-8).value);
  }
}
BENCHMARK(BM_PhiF)->Unit(benchmark::kMillisecond);
