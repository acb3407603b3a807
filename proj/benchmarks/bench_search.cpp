#include <benchmark/benchmark.h>

#include "lrclab/search.hpp"

using namespace lrclab;

static void BM_ExhaustiveNoCode(benchmark::State& state) {
  SearchTask t;
  t.q = 2;
  t.n = 9;
  t.k = 3;
  t.d_target = 5;
  t.r_target = 1;
  t.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_singleton_optimal(t).subspaces_visited);
}
BENCHMARK(BM_ExhaustiveNoCode)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveWitnesses(benchmark::State& state) {
  SearchTask t;
  t.q = 2;
  t.n = 8;
  t.k = 4;
  t.d_target = 4;
  t.r_target = 3;
  t.require_disjoint = true;
  for (auto _ : state) benchmark::DoNotOptimize(search_singleton_optimal(t).witnesses.size());
}
BENCHMARK(BM_ExhaustiveWitnesses)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSubspaces(benchmark::State& state) {
  const auto f = FieldSpec::from_order(2);
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_subspaces(f, 8, 4, [&](const GFMatrix&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSubspaces)->Unit(benchmark::kMillisecond);
