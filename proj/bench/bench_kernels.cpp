// Serial reference vs OpenMP kernel, for the three hot paths. Run with
//   ./bench/bench_kernels [--benchmark_filter=...]
#include <benchmark/benchmark.h>

#include "classieve/cubic.hpp"
#include "classieve/quadratic.hpp"
#include "classieve/sieve.hpp"

using namespace classieve;

namespace {

void BM_quadratic_census_serial(benchmark::State& state) {
  const i64 X = state.range(0);
  for (auto _ : state) {
    auto census = enumerate_quadratic_serial(X, SignClass::both);
    benchmark::DoNotOptimize(census.D.data());
  }
  state.SetItemsProcessed(state.iterations() * X);
}

void BM_quadratic_census_parallel(benchmark::State& state) {
  const i64 X = state.range(0);
  for (auto _ : state) {
    auto census = enumerate_quadratic(X, SignClass::both);
    benchmark::DoNotOptimize(census.D.data());
  }
  state.SetItemsProcessed(state.iterations() * X);
}

void BM_cubic_census_serial(benchmark::State& state) {
  const i64 X = state.range(0);
  for (auto _ : state) {
    auto census = enumerate_cubic_serial(X, true);
    benchmark::DoNotOptimize(census.fields.data());
  }
}

void BM_cubic_census_parallel(benchmark::State& state) {
  const i64 X = state.range(0);
  for (auto _ : state) {
    auto census = enumerate_cubic(X, true);
    benchmark::DoNotOptimize(census.fields.data());
  }
}

void BM_sieve_stats_serial(benchmark::State& state) {
  const auto inst =
      synthetic_instance(7, state.range(0), /*zmax=*/100);
  for (auto _ : state) {
    auto stats = sieve_stats_serial(inst);
    benchmark::DoNotOptimize(stats.count_p.data());
  }
}

void BM_sieve_stats_parallel(benchmark::State& state) {
  const auto inst =
      synthetic_instance(7, state.range(0), /*zmax=*/100);
  for (auto _ : state) {
    auto stats = sieve_stats(inst);
    benchmark::DoNotOptimize(stats.count_p.data());
  }
}

}  // namespace

BENCHMARK(BM_quadratic_census_serial)
    ->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_quadratic_census_parallel)
    ->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cubic_census_serial)
    ->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cubic_census_parallel)
    ->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_stats_serial)
    ->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_stats_parallel)
    ->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
