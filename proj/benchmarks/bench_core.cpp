#include <benchmark/benchmark.h>

#include "entlab/analysis.hpp"
#include "entlab/ground.hpp"
#include "entlab/ising.hpp"
#include "entlab/measures.hpp"
#include "entlab/partitions.hpp"
#include "entlab/state.hpp"

using namespace entlab;

static void BM_ApplyHamiltonian(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  const IsingParameters params{n, 0.5, 0.0};
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::VectorXd x = Eigen::VectorXd::Random(static_cast<Eigen::Index>(dim));
  x.normalize();
  for (auto _ : bench) {
    Eigen::VectorXd y = apply_hamiltonian(params, x);
    benchmark::DoNotOptimize(y.data());
  }
  bench.SetComplexityN(static_cast<benchmark::IterationCount>(dim));
}
BENCHMARK(BM_ApplyHamiltonian)->DenseRange(8, 16, 2)->Complexity();

static void BM_Purity(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  const auto state = haar_random_state(n, 7);
  const Bipartition part(n, (std::uint64_t{1} << (n / 2)) - 1);
  for (auto _ : bench) {
    benchmark::DoNotOptimize(purity(state, part));
  }
}
BENCHMARK(BM_Purity)->DenseRange(8, 16, 2);

static void BM_DenseGround(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  for (auto _ : bench) {
    auto result = dense_ground_state({n, 0.5, 0.0});
    benchmark::DoNotOptimize(result.energy);
  }
}
BENCHMARK(BM_DenseGround)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_LanczosGround(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  for (auto _ : bench) {
    auto result = lanczos_ground_state({n, 0.5, 0.0});
    benchmark::DoNotOptimize(result.energy);
  }
}
BENCHMARK(BM_LanczosGround)
    ->DenseRange(8, 14, 2)
    ->Unit(benchmark::kMillisecond);

static void BM_BalancedDistribution(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  const auto state = solve_ground({n, 0.5, 0.0}).state;
  const auto family = PartitionFamily::balanced(n);
  for (auto _ : bench) {
    auto result = distribution(state, family, 1, false, 1);
    benchmark::DoNotOptimize(result.summary.mu);
  }
}
BENCHMARK(BM_BalancedDistribution)
    ->DenseRange(8, 12, 2)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
