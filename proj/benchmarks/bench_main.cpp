#include <benchmark/benchmark.h>

#include "rectmatch/chain.hpp"
#include "rectmatch/counterexample.hpp"
#include "rectmatch/geometry.hpp"
#include "rectmatch/rng.hpp"
#include "rectmatch/solvers.hpp"

using namespace rectmatch;

namespace {

void BM_GenerateInstance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_instance(n, seed++, Model::UniformSquare));
  }
}
BENCHMARK(BM_GenerateInstance)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SolveExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto inst = generate_instance(n, seed++, Model::UniformSquare);
    benchmark::DoNotOptimize(solve_exact(inst));
  }
}
BENCHMARK(BM_SolveExact)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_GreedySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = generate_instance(n, 7, Model::UniformSquare);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_greedy_sweep(inst));
  }
}
BENCHMARK(BM_GreedySweep)->Arg(100)->Arg(1000)->Arg(10000);

ChainSpec bench_chain(int n) {
  Xoshiro256StarStar rng(42);
  ChainSpec c;
  c.P.resize(n, n);
  for (int j = 0; j < n; ++j) {
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      c.P(i, j) = rng.uniform01() + 1e-3;
      sum += c.P(i, j);
    }
    c.P.col(j) /= sum;
  }
  c.f = Eigen::VectorXd::Constant(n, 1.0);
  c.p1 = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int i = 0; i < n; ++i) c.labels.push_back("e" + std::to_string(i + 1));
  return c;
}

void BM_Stationary(benchmark::State& state) {
  const auto c = bench_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationary(c));
  }
}
BENCHMARK(BM_Stationary)->Arg(6)->Arg(18)->Arg(64);

void BM_ConditionalSampler(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_conditional_extension(t, 1000, seed++));
  }
}
BENCHMARK(BM_ConditionalSampler)->Arg(5)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
