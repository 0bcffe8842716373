#include <benchmark/benchmark.h>

#include <random>

#include "cuspscan/anomaly.hpp"
#include "cuspscan/scan.hpp"

using namespace cusp;

namespace {

JacobianMatrix random_jacobian(std::mt19937_64& rng, int rows, int n) {
  std::uniform_int_distribution<long> d(-3, 3);
  JacobianMatrix j(rows, n);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < n; ++c) j.set(i, c, Rat(d(rng)), Rat(d(rng)));
  return j;
}

void BM_MinorRank(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int k = static_cast<int>(state.range(0));
  const JacobianMatrix j = random_jacobian(rng, k, k + 2);
  for (auto _ : state) benchmark::DoNotOptimize(minor_rank(j));
}
BENCHMARK(BM_MinorRank)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_Hnf(benchmark::State& state) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-4, 4);
  IntMatrix m(4, 8);
  for (auto& e : m.e) e = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf);

void BM_QRank(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  QMatrix m(8, 8);
  for (auto& e : m.e) {
    e = Rat(num(rng), den(rng));
    e.canonicalize();
  }
  for (auto _ : state) benchmark::DoNotOptimize(q_rank(m));
}
BENCHMARK(BM_QRank);

void BM_ScanCodim2(benchmark::State& state) {
  ScanConfig cfg;
  cfg.n = 2;
  cfg.codim_min = cfg.codim_max = 2;
  cfg.max_coeff = 1;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ScanOutcome o = run_scan(cfg);
    benchmark::DoNotOptimize(o.unique_lattices);
  }
}
BENCHMARK(BM_ScanCodim2)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
