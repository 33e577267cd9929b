#include <benchmark/benchmark.h>

#include <random>

#include "mwgames/analysis.hpp"
#include "mwgames/schemes.hpp"
#include "test_support.hpp"

namespace {

using namespace mwgames;

void BM_InduceExactBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const BimatrixGame g = testing::random_game(rng, n, n);
  const DensityOperator rho = density_from_pure(basis_state(0, n - 1, n, n));
  const OperatorFamily fam = gmw_family(n);
  for (auto _ : state) benchmark::DoNotOptimize(induce_bimatrix(g, rho, fam, fam));
}
BENCHMARK(BM_InduceExactBasis)->DenseRange(2, 8, 2);

void BM_InduceFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const BimatrixGame g = testing::random_game(rng, n, n);
  const DensityOperator rho = density_from_pure(testing::random_pure_state(rng, n, n));
  const OperatorFamily fam = gmw_family(n);
  for (auto _ : state) benchmark::DoNotOptimize(induce_bimatrix(g, rho, fam, fam));
}
BENCHMARK(BM_InduceFloat)->DenseRange(2, 8, 2);

void BM_FinalState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const DensityOperator rho = testing::random_density(rng, n, n);
  const OperatorFamily fam = gmw_family(n);
  const MixedStrategy u = MixedStrategy::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(final_state(rho, fam, fam, u, u));
}
BENCHMARK(BM_FinalState)->DenseRange(2, 8, 2);

void BM_CheckRecovery(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const BimatrixGame g = testing::random_game(rng, n, n);
  const OperatorFamily fam = gmw_family(n);
  for (auto _ : state) benchmark::DoNotOptimize(check_recovery(g, fam, fam));
}
BENCHMARK(BM_CheckRecovery)->DenseRange(2, 6, 2);

void BM_MixedNash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  const BimatrixGame g = testing::random_game(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_nash(g));
}
BENCHMARK(BM_MixedNash)->DenseRange(2, 5, 1);

}  // namespace

BENCHMARK_MAIN();
