#include <benchmark/benchmark.h>

#include <random>

#include "lozi/derivatives.hpp"
#include "lozi/geometry.hpp"
#include "lozi/pruning.hpp"
#include "lozi/tent.hpp"

namespace {

lozi::Word random_word(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  lozi::Word w;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < m; ++i) w.tail.push_back(coin(rng) ? lozi::Symbol::Plus : lozi::Symbol::Minus);
  for (std::size_t i = 0; i < n; ++i) w.head.push_back(coin(rng) ? lozi::Symbol::Plus : lozi::Symbol::Minus);
  return w;
}

void BM_EvalPQ(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const lozi::Word w = random_word(rng, depth + 2, depth + 1);
  const lozi::Params params{1.7, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lozi::eval_p(w, depth, params));
    benchmark::DoNotOptimize(lozi::eval_q(w, depth, params));
  }
}
BENCHMARK(BM_EvalPQ)->Arg(10)->Arg(30)->Arg(60);

void BM_Raster(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lozi::pruned_region_raster({1.7, 0.5}, len, 30));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * len)));
}
BENCHMARK(BM_Raster)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EntropyCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lozi::entropy_estimate({1.7, 0.0}, n, 30));
  }
}
BENCHMARK(BM_EntropyCount)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_LapNumber(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lozi::lap_number(1.7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LapNumber)->Arg(16)->Arg(24);

void BM_UnstableManifold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lozi::unstable_manifold({1.7, 0.5}, lozi::UnstableSeed::P1Right, static_cast<double>(state.range(0))));
  }
}
BENCHMARK(BM_UnstableManifold)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const lozi::Params params[] = {{1.0, 0.5}, {1.7, 0.5}, {0.2, 0.5}};
  for (auto _ : state) {
    for (const auto& p : params) benchmark::DoNotOptimize(lozi::classify_zero_entropy(p));
  }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
