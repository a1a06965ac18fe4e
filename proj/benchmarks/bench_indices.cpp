#include <benchmark/benchmark.h>

#include "coalval/indices.hpp"
#include "coalval/random.hpp"

namespace {

using namespace coalval;

void bm_shapley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = trial_rng(1, static_cast<std::uint64_t>(n));
  const TUGame g = random_game(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(shapley(g));
  state.SetComplexityN(n);
}
BENCHMARK(bm_shapley)->DenseRange(11, 20, 3)->Complexity();

void bm_prediction_value(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = trial_rng(2, static_cast<std::uint64_t>(n));
  const ProbabilisticGame g(random_game(n, rng), random_measure(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(prediction_value(g));
  state.SetComplexityN(n);
}
BENCHMARK(bm_prediction_value)->DenseRange(11, 20, 3)->Complexity();

void bm_dividends(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = trial_rng(3, static_cast<std::uint64_t>(n));
  const TUGame g = random_game(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(harsanyi_dividends(g));
  state.SetComplexityN(n);
}
BENCHMARK(bm_dividends)->DenseRange(11, 20, 3)->Complexity();

} // namespace

BENCHMARK_MAIN();
