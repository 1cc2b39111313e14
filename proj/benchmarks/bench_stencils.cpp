#include "plap/flux.hpp"
#include "plap/grid.hpp"
#include "plap/stencils.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

plap::ScalarField wavy_field(int cells) {
  const plap::GridGeometry geom = plap::GridGeometry::unit_square(cells);
  return plap::ScalarField::sample(geom, [](const std::array<double, 3>& x) {
    return std::sin(3.0 * x[0]) * std::cos(2.0 * x[1]);
  });
}

}  // namespace

static void BM_Hessian(benchmark::State& state) {
  const plap::ScalarField f = wavy_field(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plap::hessian(f));
  state.SetItemsProcessed(state.iterations() * f.geom().num_points());
}
BENCHMARK(BM_Hessian)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_FluxDivergence(benchmark::State& state) {
  const plap::ScalarField f = wavy_field(static_cast<int>(state.range(0)));
  const plap::ProblemParams params(2, 3.0, 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(plap::flux_divergence(f, params));
  state.SetItemsProcessed(state.iterations() * f.geom().num_points());
}
BENCHMARK(BM_FluxDivergence)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
