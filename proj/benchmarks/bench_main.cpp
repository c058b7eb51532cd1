#include <benchmark/benchmark.h>

#include "gambler/discrete.hpp"
#include "gambler/policy.hpp"
#include "gambler/simulate.hpp"
#include "gambler/value.hpp"

namespace {

gambler::Params params06() {
  return gambler::Params::from_strings("0.6", "1");
}

void BM_ValueLattice(benchmark::State& state) {
  const auto params = params06();
  const unsigned level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto table = gambler::value_lattice(level, params);
    benchmark::DoNotOptimize(table.data());
  }
}
BENCHMARK(BM_ValueLattice)->Arg(12)->Arg(16)->Arg(20);

void BM_ValueExpansionPeriodic(benchmark::State& state) {
  const auto params = params06();
  const auto bits = gambler::expand_binary(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gambler::value_expansion(bits, params));
  }
}
BENCHMARK(BM_ValueExpansionPeriodic);

void BM_BellmanResidual(benchmark::State& state) {
  const auto params = params06();
  const unsigned level = static_cast<unsigned>(state.range(0));
  const auto f = gambler::CandidateFn::exact_value();
  for (auto _ : state) {
    auto report = gambler::bellman_residual(f, level, level, params);
    benchmark::DoNotOptimize(report.max_residual);
  }
}
BENCHMARK(BM_BellmanResidual)->Arg(8)->Arg(10);

void BM_ValueIteration(benchmark::State& state) {
  gambler::DiscreteSpec spec(static_cast<int>(state.range(0)), params06());
  for (auto _ : state) {
    auto table = gambler::value_iteration(spec, 0.0, 1e-12);
    benchmark::DoNotOptimize(table.values.data());
  }
}
BENCHMARK(BM_ValueIteration)->Arg(64)->Arg(100);

void BM_Episodes(benchmark::State& state) {
  const auto params = params06();
  const auto start = gambler::expand_binary(11, 16);
  gambler::Rng rng(7);
  for (auto _ : state) {
    auto ep = gambler::run_episode(start, gambler::Policy::bold(), params, 100,
                                   rng);
    benchmark::DoNotOptimize(ep.discounted_return);
  }
}
BENCHMARK(BM_Episodes);

}  // namespace

BENCHMARK_MAIN();
