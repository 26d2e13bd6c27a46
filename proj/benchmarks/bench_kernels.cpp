#include <benchmark/benchmark.h>

#include "zlab/unipotent.hpp"

using namespace zlab;

namespace {

void BM_KernelIntersection(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Quotient Q = Quotient::build(2, 2, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_intersection(Q, n));
}
BENCHMARK(BM_KernelIntersection)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_KernelIntersectionThreaded(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, 5);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_intersection(Q, 4, threads));
}
BENCHMARK(BM_KernelIntersectionThreaded)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Representation(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, 4);
  std::vector<Unipotent> images = {Unipotent::from_rank(3, 2, 3),
                                   Unipotent::from_rank(3, 2, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(representation(Q, images));
}
BENCHMARK(BM_Representation);

}  // namespace

BENCHMARK_MAIN();
