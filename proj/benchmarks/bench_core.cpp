#include <benchmark/benchmark.h>

#include "smarand/arith.hpp"
#include "smarand/census.hpp"
#include "smarand/factorize.hpp"
#include "smarand/irrationality.hpp"
#include "smarand/sieve.hpp"
#include "smarand/smarandache.hpp"

using namespace smarand;

static void BM_SpfSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_spf_sieve(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpfSieve)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_BuildTable(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTable)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Factorize64(benchmark::State& state) {
  const std::uint64_t n = 4294967291ULL * 4294967279ULL;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize64)->Unit(benchmark::kMicrosecond);

// s!^2 vs n^3 near the crossover, where the lgamma screen cannot decide.
static void BM_ExactCompare(benchmark::State& state) {
  const auto s = static_cast<std::uint64_t>(state.range(0));
  const ExponentK k(3, 2);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), s);
  mpz_class n;
  mpz_root(n.get_mpz_t(), mpz_class(f * f).get_mpz_t(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_compare_factorial_power(s, n, k));
}
BENCHMARK(BM_ExactCompare)->Arg(20)->Arg(200)->Arg(2000)->Unit(benchmark::kMicrosecond);

static void BM_CountNkTable(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const SmarandacheTable table = build_table(x);
  for (auto _ : state) benchmark::DoNotOptimize(count_Nk(x, ExponentK(2), table));
}
BENCHMARK(BM_CountNkTable)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_CountNkDivisors(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_Nk_by_divisors(x, ExponentK(2)));
}
BENCHMARK(BM_CountNkDivisors)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_PsiScan(benchmark::State& state) {
  const SmarandacheTable table = build_table(1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(psi_smooth_count(1'000'000, 41, table));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_PsiScan)->Unit(benchmark::kMicrosecond);

static void BM_LogFactorial(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_factorial(n));
    n = n % 100'000 + 1;
  }
}
BENCHMARK(BM_LogFactorial);

static void BM_EConvergents(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(e_convergents(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EConvergents)->Arg(1'000'000)->Arg(1'000'000'000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
