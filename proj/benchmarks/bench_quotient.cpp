#include <benchmark/benchmark.h>

#include "zlab/quotient.hpp"

using namespace zlab;

namespace {

void BM_BuildQuotient(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Quotient::build(2, 2, m));
}
BENCHMARK(BM_BuildQuotient)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, 4);
  GroupWord w = GroupWord::parse("[a0,a1]^3*a0^-2*a1^5");
  for (auto _ : state) benchmark::DoNotOptimize(Q.evaluate(w));
}
BENCHMARK(BM_Evaluate);

void BM_SubgroupClosure(benchmark::State& state) {
  Quotient Q = Quotient::build(2, 2, 4);
  std::vector<int> seeds;
  for (const auto& w : filtration_generators_upto(2, 2, 3, 2))
    seeds.push_back(Q.evaluate(w));
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_generated(Q, seeds));
}
BENCHMARK(BM_SubgroupClosure);

}  // namespace

BENCHMARK_MAIN();
