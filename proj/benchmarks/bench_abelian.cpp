#include <benchmark/benchmark.h>

#include <random>

#include "qcw/abelian.hpp"
#include "qcw/grothendieck.hpp"

namespace {

qcw::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> dist(-20, 20);
  std::vector<qcw::IntVector> rows(n, qcw::IntVector(n));
  for (auto& r : rows)
    for (auto& x : r) x = dist(rng);
  return qcw::IntMatrix::from_rows(rows, n);
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 12, 2);

void BM_K0(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const qcw::FDAlgebra b(std::vector<std::size_t>(l, 3));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::k0(b, l + 1));
}
BENCHMARK(BM_K0)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
