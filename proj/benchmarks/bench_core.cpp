#include <benchmark/benchmark.h>

#include <random>

#include "dioid/projector.hpp"
#include "dioid/series.hpp"

using namespace dioid;

namespace {

Matrix<MaxPlus> random_matrix(std::mt19937_64& rng, std::size_t n, double density) {
  std::uniform_int_distribution<std::int64_t> w(-10, 2);
  std::bernoulli_distribution keep(density);
  Matrix<MaxPlus> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m(i, j) = MaxPlus(w(rng));
  return m;
}

void BM_KleeneStar(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(rng, n, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_star(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KleeneStar)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_Project(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(rng, n, 0.2);
  Matrix<MaxPlus> b(n, n, MaxPlus::top());
  std::uniform_int_distribution<std::int64_t> lag(0, 30);
  for (std::size_t i = 0; i + 1 < n; ++i) b(i + 1, i) = MaxPlus(lag(rng));
  Matrix<MaxPlus> x0(n, 1, MaxPlus(100));
  for (auto _ : state) benchmark::DoNotOptimize(project(a, b, x0));
}
BENCHMARK(BM_Project)->RangeMultiplier(2)->Range(8, 64);

void BM_SeriesProduct(benchmark::State& state) {
  Series s = Series::periodic({{MaxPlus(4), 1}}, {{MaxPlus(7), 4}, {MaxPlus(9), 5}}, {18, 2});
  Series t = Series::periodic({{MaxPlus(1), 0}}, {{MaxPlus(3), 2}}, {static_cast<std::int64_t>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(otimes(s, t));
}
BENCHMARK(BM_SeriesProduct)->Arg(5)->Arg(27)->Arg(121);

void BM_SeriesResidual(benchmark::State& state) {
  Series s = Series::periodic({{MaxPlus(4), 1}}, {{MaxPlus(7), 4}, {MaxPlus(9), 5}}, {18, 2});
  Series t = Series::periodic({{MaxPlus(1), 0}}, {{MaxPlus(3), 2}}, {static_cast<std::int64_t>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(lres(t, s));
}
BENCHMARK(BM_SeriesResidual)->Arg(5)->Arg(27)->Arg(121);

}  // namespace

BENCHMARK_MAIN();
