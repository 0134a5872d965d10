#include <benchmark/benchmark.h>

#include <random>

#include "frolicher/rational_matrix.hpp"
#include "frolicher/s6.hpp"
#include "frolicher/spectral.hpp"

using namespace frolicher;

namespace {

RationalMatrix random_matrix(std::size_t n, std::size_t rank_bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  RationalMatrix a(n, rank_bound), b(rank_bound, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank_bound; ++j) {
      a(i, j) = Rational(coef(rng), 1 + (coef(rng) + 5) % 3);
      b(j, i) = Rational(coef(rng));
    }
  return a * b;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n, n - n / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n, n / 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(8)->Arg(16)->Arg(32);

void BM_PagesExplicitModel(benchmark::State& state) {
  const long long s = state.range(0);
  const auto k = s6::realize_model({s, s, s, s, s});
  for (auto _ : state) benchmark::DoNotOptimize(pages_explicit(k, 5));
}
BENCHMARK(BM_PagesExplicitModel)->Arg(1)->Arg(3)->Arg(6);

void BM_PagesFiltrationModel(benchmark::State& state) {
  const long long s = state.range(0);
  const auto k = s6::realize_model({s, s, s, s, s});
  for (auto _ : state) benchmark::DoNotOptimize(pages_filtration(k, 5));
}
BENCHMARK(BM_PagesFiltrationModel)->Arg(1)->Arg(3)->Arg(6);

void BM_VerifyModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s6::verify_model({1, 2, 3, 2, 1}));
}
BENCHMARK(BM_VerifyModel);

void BM_EnumerateDiamonds(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(s6::enumerate_diamonds(state.range(0), false, false));
}
BENCHMARK(BM_EnumerateDiamonds)->Arg(2)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
