// Serial reference vs OpenMP kernels, and the RK4 stepping variants.

#include <benchmark/benchmark.h>

#include <vector>

#include "rddi/evolve.hpp"
#include "rddi/scan.hpp"
#include "rddi/steady_grid.hpp"

using namespace rddi;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

const std::vector<double> kOmegas = linspace(0.0, 10.0, 41);
const std::vector<double> kDeltas = linspace(-15.0, 15.0, 41);
const std::vector<double> kPhis = linspace(0.2, 1.0, 9);

void BM_SteadyGridSerial(benchmark::State& state) {
  const auto k = CouplingParams::at(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(steady_grid_serial(k, Geometry::Symmetric, kOmegas, kDeltas));
}
BENCHMARK(BM_SteadyGridSerial)->Unit(benchmark::kMillisecond);

void BM_SteadyGridParallel(benchmark::State& state) {
  const auto k = CouplingParams::at(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(steady_grid(k, Geometry::Symmetric, kOmegas, kDeltas, state.range(0)));
}
BENCHMARK(BM_SteadyGridParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FidelityScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_scan_serial(kPhis, Geometry::Antisymmetric));
}
BENCHMARK(BM_FidelityScanSerial)->Unit(benchmark::kMillisecond);

void BM_FidelityScanParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fidelity_scan(kPhis, Geometry::Antisymmetric, {}, state.range(0)));
}
BENCHMARK(BM_FidelityScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// One sample interval (0.05/gamma) of driven evolution per iteration.
const Liouvillian kDriven = build_liouvillian({2.0, -3.0, Geometry::Antisymmetric}, CouplingParams::at(0.5));
constexpr double kInterval = 0.05;

void BM_StageReference(benchmark::State& state) {
  const Matrix16 l = kDriven.matrix();
  const double h = integration_step(kDriven, {});
  const int steps = static_cast<int>(std::ceil(kInterval / h));
  Vector16 v = DensityMatrix().vectorized();
  for (auto _ : state) {
    for (int s = 0; s < steps; ++s) v = rk4_reference_step(l, v, h);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_StageReference);

void BM_ComplexEvolver(benchmark::State& state) {
  Evolver e(kDriven, {});
  Vector16 v = DensityMatrix().vectorized();
  for (auto _ : state) {
    v = e.advance(v, kInterval);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ComplexEvolver);

void BM_HermitianEvolver(benchmark::State& state) {
  HermitianEvolver e(kDriven, {});
  RealVector16 x = hermitian_coordinates(DensityMatrix().matrix());
  for (auto _ : state) {
    x = e.advance(x, kInterval);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_HermitianEvolver);

}  // namespace

BENCHMARK_MAIN();
