#include <benchmark/benchmark.h>

#include <random>

#include "ffsieve/arith.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/search.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/transference.hpp"

using namespace ffsieve;

namespace {

std::vector<Poly> random_monic(const Field& F, int deg, std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<Poly> out;
  const std::uint64_t total = checked_pow(F.order(), deg);
  for (std::size_t i = 0; i < count; ++i) out.push_back(enumerate_monic(F, deg).at(rng() % total));
  return out;
}

void BM_IsIrreducible(benchmark::State& st) {
  const Field F = Field::of_order(static_cast<std::uint64_t>(st.range(0)));
  const auto polys = random_monic(F, static_cast<int>(st.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(is_irreducible(F, polys[i++ % polys.size()]));
}
BENCHMARK(BM_IsIrreducible)->Args({2, 16})->Args({2, 48})->Args({3, 12})->Args({5, 10});

void BM_Factorize(benchmark::State& st) {
  const Field F = Field::of_order(static_cast<std::uint64_t>(st.range(0)));
  const auto polys = random_monic(F, static_cast<int>(st.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(factorize(F, polys[i++ % polys.size()]));
}
BENCHMARK(BM_Factorize)->Args({2, 16})->Args({2, 40})->Args({3, 12})->Args({4, 10});

void BM_ComputePrimes(benchmark::State& st) {
  const Field F = Field::of_order(2);
  for (auto _ : st) benchmark::DoNotOptimize(compute_primes(F, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ComputePrimes)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SumS1(benchmark::State& st) {
  const Field F = Field::of_order(2);
  const auto P = SieveParams::make(F, TupleH({Poly()}), 0, 0.4, 2, 0.2, static_cast<int>(st.range(0)), 2);
  SumOptions opt;
  opt.route = static_cast<Route>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(sum_S1(P, opt).exact);
}
BENCHMARK(BM_SumS1)->Args({12, 0})->Args({12, 1})->Args({16, 0})->Args({16, 1})->Unit(benchmark::kMillisecond);

void BM_SumS3Factored(benchmark::State& st) {
  const Field F = Field::of_order(3);
  const auto P = SieveParams::make(F, TupleH({Poly()}), 0, 0.4, 2, 0.2, static_cast<int>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(sum_S3_S4(P).first.exact);
}
BENCHMARK(BM_SumS3Factored)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PseudorandomExhaustive(benchmark::State& st) {
  const Field F = Field::of_order(2);
  const int n = static_cast<int>(st.range(0));
  const auto sp = SieveParams::make(F, TupleH({Poly()}), 0, 0.4, 2, 0.3, n, 2);
  const auto table = nu_table(MeasureParams::make(sp, 0.2));
  const FqnSpace V(F, n);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        pseudorandom_estimate(V, table, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate);
}
BENCHMARK(BM_PseudorandomExhaustive)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ConfigSearch(benchmark::State& st) {
  const Field F = Field::of_order(3);
  for (auto _ : st) benchmark::DoNotOptimize(find_prime_configs(F, static_cast<int>(st.range(0)), 1).found.size());
}
BENCHMARK(BM_ConfigSearch)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
