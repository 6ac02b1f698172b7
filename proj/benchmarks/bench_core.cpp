#include <benchmark/benchmark.h>

#include "shadowdyn/euclid.hpp"
#include "shadowdyn/growth.hpp"
#include "shadowdyn/markov.hpp"
#include "shadowdyn/mordell.hpp"
#include "shadowdyn/topograph.hpp"

using namespace shadowdyn;

static void BM_Topograph(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate({17, -12, 2}, depth));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << (depth + 1)) - 1));
}
BENCHMARK(BM_Topograph)->DenseRange(8, 16, 4);

static void BM_ShadowMarkovTree(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(shadow_markov_tree(depth, kDefaultDepthLimit, threads));
}
BENCHMARK(BM_ShadowMarkovTree)->Args({12, 1})->Args({12, 4})->Args({16, 1});

static void BM_PellPower(benchmark::State& state) {
  const auto ctx = PellContext::for_d(13);
  for (auto _ : state) benchmark::DoNotOptimize(pell_power(ctx, state.range(0)));
}
BENCHMARK(BM_PellPower)->RangeMultiplier(10)->Range(10, 100000);

static void BM_HalfTraceRecurrence(benchmark::State& state) {
  const auto ctx = PellContext::for_d(13);
  for (auto _ : state) benchmark::DoNotOptimize(half_trace_sequence(ctx, state.range(0)));
}
BENCHMARK(BM_HalfTraceRecurrence)->RangeMultiplier(10)->Range(10, 10000);

static void BM_PellFundamental(benchmark::State& state) {
  const BigInt d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pell_fundamental(d));
}
BENCHMARK(BM_PellFundamental)->Arg(61)->Arg(991)->Arg(1000003);

static void BM_LyapunovEstimate(benchmark::State& state) {
  const auto spec = PathSpec::golden();
  for (auto _ : state) benchmark::DoNotOptimize(lyapunov_estimate(spec, state.range(0)));
}
BENCHMARK(BM_LyapunovEstimate)->Arg(40)->Arg(500)->Arg(5000);

static void BM_RelativeGrowth(benchmark::State& state) {
  const auto ctx = PellContext::for_d(2);
  const auto spec = PathSpec::golden();
  for (auto _ : state) benchmark::DoNotOptimize(relative_shadow_growth(ctx, spec, state.range(0)));
}
BENCHMARK(BM_RelativeGrowth)->Arg(20)->Arg(30);

static void BM_FindRiver(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_river({17, -12, 2}));
}
BENCHMARK(BM_FindRiver);

static void BM_MobiusTransform(benchmark::State& state) {
  const auto x = sqrt_cf(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_transform(x, {3, 2, 4, 3}));
}
BENCHMARK(BM_MobiusTransform)->Arg(7)->Arg(94);
BENCHMARK_MAIN();
