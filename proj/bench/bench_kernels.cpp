// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "ramlab/kernels.hpp"

using namespace ramlab;

namespace {

const RegularSystem& system_for(int64_t id) {
  static const RegularSystem systems[] = {RegularSystem::dirichlet(), RegularSystem::unitary(), RegularSystem::mix()};
  return systems[id];
}

template <CaTable (*Kernel)(const RegularSystem&, i64, i64, CaRoute)>
void BM_CaTable(benchmark::State& state) {
  const auto& A = system_for(state.range(1));
  const i64 n = state.range(0);
  const auto route = state.range(2) == 0 ? CaRoute::Divisor : CaRoute::Core;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(A, n, n, route));
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <std::vector<std::vector<i64>> (*Kernel)(const RegularSystem&, i64, i64)>
void BM_PrefixSums(benchmark::State& state) {
  const auto& A = system_for(state.range(1));
  const i64 x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(A, 200, x));
  state.SetItemsProcessed(state.iterations() * 200 * x);
}

template <i64 (*Kernel)(const RegularSystem&, i64, i64, i64)>
void BM_ProductSum(benchmark::State& state) {
  const auto& A = system_for(state.range(1));
  const i64 x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(A, 360, 840, x));
  state.SetItemsProcessed(state.iterations() * x);
}

void table_args(benchmark::internal::Benchmark* b) {
  for (int64_t route : {0, 1})
    for (int64_t sys : {0, 1, 2}) b->Args({300, sys, route});
}

void sum_args(benchmark::internal::Benchmark* b) {
  for (int64_t sys : {0, 1, 2}) b->Args({10000, sys})->Args({100000, sys});
}

}  // namespace

BENCHMARK(BM_CaTable<kernels::ca_table_serial>)->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CaTable<kernels::ca_table_parallel>)->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixSums<kernels::ca_prefix_sums_serial>)->Apply(sum_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixSums<kernels::ca_prefix_sums_parallel>)->Apply(sum_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductSum<kernels::ca_product_sum_serial>)->Apply(sum_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ProductSum<kernels::ca_product_sum_parallel>)->Apply(sum_args)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
