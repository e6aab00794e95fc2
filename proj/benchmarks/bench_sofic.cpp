#include <benchmark/benchmark.h>

#include "qcw/sofic.hpp"

namespace {

void BM_SearchCyclic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = qcw::cyclic_group_table(n);
  const mpq_class eps(1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::search(t, eps, n));
}
BENCHMARK(BM_SearchCyclic)->DenseRange(2, 6);

void BM_VerifyRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = qcw::cyclic_group_table(n);
  qcw::SoficMap s;
  s.degree = n;
  for (std::size_t k = 0; k < n; ++k) {
    qcw::Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (i + k) % n;
    s.sigma[t.name(k)] = p;
  }
  const mpq_class eps(1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::verify(t, s, eps));
}
BENCHMARK(BM_VerifyRegular)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
