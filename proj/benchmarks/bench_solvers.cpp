#include "plap/elliptic.hpp"
#include "plap/parabolic.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

static void BM_EllipticSolve(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  const plap::GridGeometry geom = plap::GridGeometry::unit_square(cells);
  const plap::EllipticProblem problem(
      plap::ProblemParams(2, 3.0, 1e-6), geom,
      plap::radial_reference(2, 3.0, {-0.5, -0.5, 0.0}));
  for (auto _ : state) benchmark::DoNotOptimize(plap::solve(problem));
}
BENCHMARK(BM_EllipticSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_NormalizedStep(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  const plap::GridGeometry geom = plap::GridGeometry::unit_square(cells);
  const double dt = plap::stable_dt(plap::ProblemParams(2, 4.0, 1e-4), geom.h);
  const plap::ParabolicProblem problem(
      plap::ProblemParams(2, 4.0, 1e-4), plap::ParabolicKind::Normalized, geom,
      8.0 * dt,
      [](const std::array<double, 3>& x) {
        return std::sin(std::numbers::pi * x[0]) * std::sin(std::numbers::pi * x[1]);
      },
      [](const std::array<double, 3>&, double) { return 0.0; });
  for (auto _ : state) benchmark::DoNotOptimize(plap::solve_normalized(problem));
  state.SetItemsProcessed(state.iterations() * 8 * geom.num_points());
}
BENCHMARK(BM_NormalizedStep)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
