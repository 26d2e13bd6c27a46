#include <benchmark/benchmark.h>

#include <random>

#include "zlab/cohomology.hpp"
#include "zlab/gf_linear.hpp"

using namespace zlab;

namespace {

void BM_F2Rank(benchmark::State& state) {
  // the shape the cocycle-identity operator takes for a 32-element group
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(3);
  PrimeFieldMatrix M(rows, cols, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) M.set(r, c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(M.rank());
}
BENCHMARK(BM_F2Rank)->Args({4096, 256})->Args({32768, 1024})->Unit(benchmark::kMillisecond);

void BM_CocycleSpace(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, static_cast<std::uint32_t>(state.range(0)));
  const GroupTable& G = Q.table();
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_basis(G, 2));
}
BENCHMARK(BM_CocycleSpace)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CoboundarySolve(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, 3);
  const GroupTable& G = Q.table();
  Cochain1 c = zero_cochain1(G, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& v : c.v) v = static_cast<std::uint32_t>(bit(rng));
  Cochain2 f = d1(c);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_witness(f));
}
BENCHMARK(BM_CoboundarySolve);

}  // namespace

BENCHMARK_MAIN();
