#include <benchmark/benchmark.h>

#include "fundseq/random.hpp"
#include "fundseq/resolve.hpp"
#include "fundseq/sequences.hpp"
#include "fundseq/suites.hpp"

using namespace fundseq;

static void BM_Snf(benchmark::State& state) {
  InstanceGenerator gen({RingDesc::integers(), 0, 0, 50, 0, 1});
  const auto n = static_cast<std::size_t>(state.range(0));
  FPModule M = gen.module(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(snf(M.relations()));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

static void BM_HomModule(benchmark::State& state) {
  InstanceGenerator gen({RingDesc::mod(12), 4, 4, 12, 0, 2});
  FPModule M = gen.module(4, 4), N = gen.module(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hom_module(M, N).module.gens());
}
BENCHMARK(BM_HomModule);

static void BM_Ext(benchmark::State& state) {
  InstanceGenerator gen({RingDesc::mod(8), 3, 3, 8, 0, 3});
  FPModule M = gen.module(3, 3), N = gen.module(3, 3);
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ext(M, N, i).gens());
}
BENCHMARK(BM_Ext)->Arg(1)->Arg(3);

static void BM_CircularSequence(benchmark::State& state) {
  InstanceGenerator gen({RingDesc::mod(12), 4, 4, 8, 0, 4});
  auto [f, g] = gen.composable_pair();
  for (auto _ : state) benchmark::DoNotOptimize(circular_sequence(f, g).exact());
}
BENCHMARK(BM_CircularSequence);

// Tensor functor over Z/4 at depth state.range(0).
static void BM_RightFundCov(benchmark::State& state) {
  InstanceGenerator gen({RingDesc::mod(4), 3, 3, 8, 0, 5});
  FunctorExpr F = FunctorExpr::tensor_left(gen.module(3, 3));
  FPModule B = gen.module(3, 3);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(right_fund_cov(F, B, depth).passes());
}
BENCHMARK(BM_RightFundCov)->Arg(2)->Arg(4);

static void BM_Suite(benchmark::State& state) {
  SuiteOptions o;
  o.count = 20;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("circular-exactness", o).passes);
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
