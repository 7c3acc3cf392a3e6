#include <benchmark/benchmark.h>

#include "heatlab/estimates.hpp"
#include "heatlab/kernelbounds.hpp"
#include "heatlab/proofcheck.hpp"
#include "heatlab/solutions.hpp"

using namespace heatlab;

namespace {

HeatSolution wave_fixture() {
  SolutionParams p;
  p.a = 1.0;
  p.domain = Rect{1.0, 3.0, 1.0, 2.0};
  return make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
}

void BM_ReportSweep(benchmark::State& state) {
  const HeatSolution u = wave_fixture();
  const ParabolicCube cube = ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(report(EstimateId::SZ_1_4, u, cube, 0.0, 1.0, {n, n}));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ReportSweep)->Arg(51)->Arg(101)->Arg(201);

void BM_SolverStep(benchmark::State& state) {
  const int nr = static_cast<int>(state.range(0));
  const auto one = [](double) { return 1.0; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_radial_heat(ModelManifold::euclidean(1), one, one,
                                               one, {0.0, 1.0, 0.0, 1.0, nr, 64}));
  }
  state.SetItemsProcessed(state.iterations() * nr * 64);
}
BENCHMARK(BM_SolverStep)->Arg(128)->Arg(512)->Arg(2048);

void BM_CutoffConstants(benchmark::State& state) {
  const CutoffProfile psi = build_cutoff(1.0, 1.0, 0.5, 4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi.measure(n, n));
  }
}
BENCHMARK(BM_CutoffConstants)->Arg(201)->Arg(401);

void BM_KernelGradientSweep(benchmark::State& state) {
  const HeatKernel K = HeatKernel::euclidean(3);
  const auto grid = default_xi_grid(100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_gradient_check(K, grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_KernelGradientSweep);

void BM_LogQuantities(benchmark::State& state) {
  const HeatSolution u = wave_fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_quantities(u, 5.0, 2.0, 1.5));
  }
}
BENCHMARK(BM_LogQuantities);

}  // namespace

BENCHMARK_MAIN();
