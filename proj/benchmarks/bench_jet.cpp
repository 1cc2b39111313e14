#include "plap/jet.hpp"
#include "plap/jet_sampling.hpp"

#include <benchmark/benchmark.h>

static void BM_FundamentalResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  plap::JetSampler sampler(n, 42);
  std::vector<plap::PointJet> jets;
  for (int i = 0; i < 1024; ++i) jets.push_back(sampler.next());
  std::size_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plap::fundamental_residual(jets[idx & 1023]));
    ++idx;
  }
}
BENCHMARK(BM_FundamentalResidual)->Arg(2)->Arg(3)->Arg(6);

static void BM_Eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  plap::JetSampler sampler(n, 42);
  std::vector<plap::PointJet> jets;
  for (int i = 0; i < 256; ++i) jets.push_back(sampler.next());
  std::size_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plap::eigendecompose(jets[idx & 255]));
    ++idx;
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(3)->Arg(6);

static void BM_InequalityBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(plap::check_fundamental_inequality(n, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_InequalityBatch)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
