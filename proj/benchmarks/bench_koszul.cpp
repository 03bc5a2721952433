#include <benchmark/benchmark.h>

#include "acyclic/builtins.hpp"
#include "acyclic/koszul.hpp"

namespace {

using namespace acyclic;

void BM_KoszulComplex(benchmark::State& state) {
  const auto m = subset_module(static_cast<std::size_t>(state.range(0)), FieldSpec::prime(1009));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_complex(m).term_dims().size());
}

void BM_TorDims(benchmark::State& state, FieldSpec field) {
  const auto m = subset_module(static_cast<std::size_t>(state.range(0)), field);
  for (auto _ : state) benchmark::DoNotOptimize(tor_dims(m));
}

void BM_HomologyWithRepresentatives(benchmark::State& state, FieldSpec field) {
  const auto k = koszul_complex(subset_module(static_cast<std::size_t>(state.range(0)), field));
  for (auto _ : state) benchmark::DoNotOptimize(homology(k).dims());
}

void BM_CeDims(benchmark::State& state) {
  const auto m = dual_module(subset_module(static_cast<std::size_t>(state.range(0)), FieldSpec::prime(1009)));
  for (auto _ : state) benchmark::DoNotOptimize(ce_dims(m));
}

void BM_InducedOnTor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = induced_chain_map(transition_map(n, n - 1, FieldSpec::prime(1009)));
  for (auto _ : state) benchmark::DoNotOptimize(induced_on_homology(f).size());
}

}  // namespace

BENCHMARK(BM_KoszulComplex)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TorDims, fp, FieldSpec::prime(1009))->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TorDims, q, FieldSpec::rationals())->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HomologyWithRepresentatives, fp, FieldSpec::prime(1009))
    ->DenseRange(4, 8, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CeDims)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedOnTor)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
