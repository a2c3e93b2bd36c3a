#include "astute/algebra.hpp"
#include "astute/counting.hpp"
#include "astute/extremal.hpp"
#include "astute/rules.hpp"

#include <benchmark/benchmark.h>

using namespace astute;

static void BM_EnumeratePcr(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto rule = make_pcr(2, n).affine;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_factor(rule, 3));
}
BENCHMARK(BM_EnumeratePcr)->DenseRange(4, 12, 4);

static void BM_IdealQuotientSize(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto lambda = make_xor(2, n).affine.characteristic_polynomial();
  for (auto _ : state) benchmark::DoNotOptimize(ideal_quotient_size(lambda, 2 * n + 2));
}
BENCHMARK(BM_IdealQuotientSize)->DenseRange(4, 16, 4);

static void BM_CountTheorem2(benchmark::State& state) {
  const auto rule = make_icr(3, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_theorem2(rule, 6));
}
BENCHMARK(BM_CountTheorem2)->DenseRange(2, 8, 2);

static void BM_SearchExtremal(benchmark::State& state) {
  const GraphParams p{2, static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(search_extremal(p));
}
BENCHMARK(BM_SearchExtremal)->Args({3, 2})->Args({2, 4})->Args({4, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
