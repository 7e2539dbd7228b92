#include <benchmark/benchmark.h>

#include "netprice/discriminatory_pricing.hpp"
#include "netprice/equilibrium.hpp"
#include "netprice/experiments.hpp"
#include "netprice/generators.hpp"
#include "netprice/two_price.hpp"
#include "netprice/uniform_pricing.hpp"
#include "netprice/value_of_info.hpp"

namespace {

using namespace netprice;

// Triangular blend at alpha = 0.3 with curvature n/2.
MarketInstance bench_instance(Index n) {
  return simulation_instance(blend(triangular_pair(n, 42), 0.3), static_cast<double>(n) / 2.0);
}

void BM_Equilibrium(benchmark::State& state) {
  const auto m = bench_instance(state.range(0));
  const auto p = PriceVector::uniform(m.n(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_equilibrium(m, p));
}
BENCHMARK(BM_Equilibrium)->RangeMultiplier(4)->Range(8, 512);

void BM_DiscriminatoryPrices(benchmark::State& state) {
  const auto m = bench_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_prices(m));
}
BENCHMARK(BM_DiscriminatoryPrices)->RangeMultiplier(4)->Range(8, 512);

void BM_UniformPrice(benchmark::State& state) {
  const auto m = bench_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_uniform_price(m));
}
BENCHMARK(BM_UniformPrice)->RangeMultiplier(4)->Range(8, 512);

void BM_RatioBounds(benchmark::State& state) {
  const auto m = bench_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratio_bounds(m));
}
BENCHMARK(BM_RatioBounds)->RangeMultiplier(4)->Range(8, 512);

void BM_TwoPriceSdp(benchmark::State& state) {
  const auto m = bench_instance(state.range(0));
  const TwoPriceInstance tp(m, 0.2, 0.6);
  TwoPriceOptions opts;
  opts.force_sdp = true;
  opts.trials = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(approximate(tp, opts));
}
BENCHMARK(BM_TwoPriceSdp)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
