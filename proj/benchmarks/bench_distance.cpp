#include <benchmark/benchmark.h>

#include "lrclab/lrc.hpp"
#include "lrclab/search.hpp"

using namespace lrclab;

static void BM_FieldMul(benchmark::State& state) {
  const auto f = FieldSpec::from_order(static_cast<std::uint32_t>(state.range(0)));
  FieldElement a{1}, b = f.generator();
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(13)->Arg(256);

static void BM_MinDistanceBinary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_code(FieldSpec::from_order(2), n, n / 2, 1);
  for (auto _ : state) {
    // Fresh copy so the cached distance is not reused.
    const auto g = LinearCode::from_generator(c.generator());
    benchmark::DoNotOptimize(min_distance(g));
  }
}
BENCHMARK(BM_MinDistanceBinary)->Arg(16)->Arg(24)->Arg(32);

static void BM_MinDistanceFixture(benchmark::State& state) {
  const auto c = evaluation_fixture(13, 3, 6);
  for (auto _ : state) {
    const auto g = LinearCode::from_generator(c.generator());
    benchmark::DoNotOptimize(min_distance(g));
  }
}
BENCHMARK(BM_MinDistanceFixture)->Unit(benchmark::kMillisecond);

static void BM_Locality(benchmark::State& state) {
  const auto c = evaluation_fixture(13, 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(locality(c).r);
}
BENCHMARK(BM_Locality)->Unit(benchmark::kMillisecond);
