#include <benchmark/benchmark.h>

#include "tautcoh/checker.hpp"
#include "tautcoh/formulas.hpp"
#include "tautcoh/linalg.hpp"
#include "tautcoh/surface.hpp"

using namespace tautcoh;

namespace {

// Sections map on P^2 with L = O(d), A = O(e); n = 3 keeps the matrix above the parallel threshold.
linalg::RationalMatrix sections_matrix(int n, int d, int e) {
  const auto mu = surface::p2_mult_table(e, 2 * d + e);
  return formulas::build_map_2515(n, mu.left(), mu.right(), mu.target(), mu).matrix;
}

void BM_RankParallel(benchmark::State& state) {
  const auto m = sections_matrix(3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void BM_RankSerial(benchmark::State& state) {
  const auto m = sections_matrix(3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::reference::rank(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void BM_KernelParallel(benchmark::State& state) {
  const auto m = sections_matrix(3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::kernel_basis(m));
}

void BM_KernelSerial(benchmark::State& state) {
  const auto m = sections_matrix(3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::reference::kernel_basis(m));
}

void BM_SuiteParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(checker::run_suite(checker::Suite::Default, Execution::Parallel));
}

void BM_SuiteSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(checker::run_suite(checker::Suite::Default, Execution::Serial));
}

}  // namespace

BENCHMARK(BM_RankParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelParallel)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSerial)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
