// Serial reference vs OpenMP kernels: dense rank mod p, and a full Betti
// table whose Koszul blocks are spread over threads.

#include <benchmark/benchmark.h>

#include <random>

#include "hibi/betti.hpp"
#include "hibi/corpus.hpp"

using namespace hibi;

namespace {

ModMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ModMatrix m(n, n, 32003);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % 32003));
  return m;
}

void BM_Rank(benchmark::State& state, ExecPolicy policy) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, policy));
}

void BM_Betti(benchmark::State& state, ExecPolicy policy) {
  const auto L = full_grid(2, 2);
  const RankWindow w{0, 4};
  MonomialMap map(L, w);
  auto gens = defining_ideal_generators(L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
  BettiOptions o;
  o.policy = policy;
  o.full_range = true;
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(gens, map, o).entries.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Rank, serial, ExecPolicy::kSerial)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Rank, parallel, ExecPolicy::kParallel)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Betti, serial, ExecPolicy::kSerial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Betti, parallel, ExecPolicy::kParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
