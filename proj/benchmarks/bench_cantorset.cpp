#include <benchmark/benchmark.h>

#include <random>

#include "qcw/cantorset.hpp"

namespace {

// Random automaton where every state keeps at least one transition.
qcw::RegularClosedSet random_set(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::bernoulli_distribution coin(0.6);
  qcw::RawAutomaton raw(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    bool any = false;
    for (int b = 0; b < 2; ++b)
      if (coin(rng)) {
        raw.add(q, b, pick(rng));
        any = true;
      }
    if (!any) raw.add(q, 0, pick(rng));
  }
  return qcw::RegularClosedSet::prune(raw);
}

void BM_CBRank(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<qcw::RegularClosedSet> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(random_set(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qcw::cb_rank_and_kernel(sets[i++ % sets.size()]));
}
BENCHMARK(BM_CBRank)->RangeMultiplier(2)->Range(4, 64);

void BM_Derivative(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto f = random_set(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::cb_derivative(f));
}
BENCHMARK(BM_Derivative)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
