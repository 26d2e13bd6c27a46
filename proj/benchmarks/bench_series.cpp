#include <benchmark/benchmark.h>

#include <random>

#include "zlab/magnus.hpp"

using namespace zlab;

namespace {

TruncatedSeries random_unit(std::uint32_t m, std::uint32_t k, std::uint32_t D,
                            std::mt19937_64& rng) {
  TruncatedSeries s = TruncatedSeries::one(m, k, D);
  std::uniform_int_distribution<std::uint32_t> coeff(0, m - 1);
  for (std::uint32_t d = 1; d <= D; ++d)
    for (const auto& w : all_words(k, d)) s.set_coeff(w, coeff(rng));
  return s;
}

void BM_SeriesMul(benchmark::State& state) {
  const auto D = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  auto a = random_unit(2, 2, D, rng);
  auto b = random_unit(2, 2, D, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void BM_SeriesInverse(benchmark::State& state) {
  const auto D = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(2);
  auto a = random_unit(3, 2, D, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(3)->Arg(4)->Arg(6);

void BM_MagnusCommutatorTower(benchmark::State& state) {
  // [a,[a,[a,b]]]-style words stress the inverse path
  GroupWord w = GroupWord::parse("[a0,[a0,[a0,a1]]]");
  for (auto _ : state) benchmark::DoNotOptimize(magnus(w, 2, 2, 5));
}
BENCHMARK(BM_MagnusCommutatorTower);

}  // namespace

BENCHMARK_MAIN();
