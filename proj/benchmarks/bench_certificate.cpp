#include <benchmark/benchmark.h>

#include "acyclic/limit.hpp"

namespace {

using namespace acyclic;

void BM_PaperCertificate(benchmark::State& state, FieldSpec field, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paper_certificate(n, field, {parallel, 0}).failures());
}

void BM_TorSystem(benchmark::State& state) {
  const auto s = paper_system(static_cast<std::size_t>(state.range(0)), FieldSpec::prime(1009));
  for (auto _ : state) benchmark::DoNotOptimize(tor_system(s).size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_PaperCertificate, fp_sequential, FieldSpec::prime(1009), false)
    ->DenseRange(4, 8, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PaperCertificate, fp_parallel, FieldSpec::prime(1009), true)
    ->DenseRange(4, 8, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PaperCertificate, q_sequential, FieldSpec::rationals(), false)
    ->DenseRange(4, 8, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorSystem)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
