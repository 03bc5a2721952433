#include <benchmark/benchmark.h>

#include <random>

#include "acyclic/builtins.hpp"
#include "acyclic/koszul.hpp"
#include "acyclic/linalg.hpp"

namespace {

using namespace acyclic;

SparseMatrix random_matrix(FieldSpec field, std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long long> value(-9, 9);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (keep(rng)) t.push_back({r, c, Scalar::from_int(field, value(rng))});
    }
  }
  return SparseMatrix::from_triplets(field, n, n, t);
}

// Largest differential of the top-level Koszul complex: structured, very sparse.
SparseMatrix koszul_differential(FieldSpec field, std::size_t n) {
  const auto k = koszul_complex(subset_module(n, field));
  return k.maps()[n / 2];
}

void BM_RankRandom(benchmark::State& state, FieldSpec field) {
  const auto m = random_matrix(field, static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}

void BM_RankKoszul(benchmark::State& state, FieldSpec field) {
  const auto m = koszul_differential(field, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["nnz"] = static_cast<double>(m.nnz());
}

void BM_KernelKoszul(benchmark::State& state, FieldSpec field) {
  const auto m = koszul_differential(field, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m).dim());
}

}  // namespace

BENCHMARK_CAPTURE(BM_RankRandom, fp, FieldSpec::prime(1009))->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK_CAPTURE(BM_RankRandom, q, FieldSpec::rationals())->RangeMultiplier(2)->Range(32, 128)->Complexity();
BENCHMARK_CAPTURE(BM_RankKoszul, fp, FieldSpec::prime(1009))->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RankKoszul, q, FieldSpec::rationals())->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KernelKoszul, fp, FieldSpec::prime(1009))->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
