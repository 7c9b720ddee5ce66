#include <benchmark/benchmark.h>

#include "tricop/decompose.hpp"
#include "tricop/gaussian.hpp"
#include "tricop/sampler.hpp"
#include "tricop/stats.hpp"

using namespace tricop;

namespace {

void BM_SampleExtremal(benchmark::State& state) {
  const ExtremePoint3 e = ExtremePoint3::from_ab(1.1, 2.3);
  const BetaParameter k(static_cast<double>(state.range(0)) / 2);
  RngStream rng(1);
  for (auto _ : state) {
    SampleBatch b = sample_extremal(e, k, 1 << 16, rng);
    benchmark::DoNotOptimize(b.xs.data());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_SampleExtremal)->Arg(1)->Arg(2)->Arg(4);

void BM_SampleMixture(benchmark::State& state) {
  const MixtureDecomposition d = decompose({0.3, 0.5, 0.2});
  RngStream rng(2);
  for (auto _ : state) {
    SampleBatch b = sample_mixture(d, BetaParameter(1.0), 1 << 16, rng);
    benchmark::DoNotOptimize(b.xs.data());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_SampleMixture);

void BM_Decompose(benchmark::State& state) {
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose({0.3, 0.5, r}));
    r = r < 0.5 ? r + 1e-6 : 0.0;
  }
}
BENCHMARK(BM_Decompose);

void BM_KsTest(benchmark::State& state) {
  RngStream rng(3);
  const SampleBatch b = sample_extremal(ExtremePoint3::from_ab(1.1, 2.3), BetaParameter(2.0), 1 << 16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ks_test(b.xs, BetaParameter(2.0)));
}
BENCHMARK(BM_KsTest);

void BM_CorrTransfer(benchmark::State& state) {
  double r = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(corr_transfer(GaussianCorrelation(r)));
    r = r < 1.0 ? r + 1e-7 : -1.0;
  }
}
BENCHMARK(BM_CorrTransfer);

}  // namespace
BENCHMARK_MAIN();
