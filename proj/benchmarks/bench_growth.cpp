#include <benchmark/benchmark.h>

#include "growth/affineweyl.hpp"
#include "growth/pipeline.hpp"

using namespace growth;

static void BM_FiniteEnumeration(benchmark::State& state, const char* label) {
  const auto rs = RootSystem::from_label(label);
  for (auto _ : state) {
    FiniteWeyl fw(rs);
    benchmark::DoNotOptimize(fw.table(fw.all())->size());
  }
}
BENCHMARK_CAPTURE(BM_FiniteEnumeration, B3, "B3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FiniteEnumeration, F4, "F4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FiniteEnumeration, E6, "E6")->Unit(benchmark::kMillisecond);

static void BM_AffineBFS(benchmark::State& state, const char* label) {
  AffineWeyl aw(std::make_shared<const FiniteWeyl>(RootSystem::from_label(label)));
  const int L = int(state.range(0));
  for (auto _ : state) {
    AffineTable table(aw, L);
    benchmark::DoNotOptimize(table.elements().size());
  }
}
BENCHMARK_CAPTURE(BM_AffineBFS, A2, "A2")->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AffineBFS, B3, "B3")->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_AssembleMS(benchmark::State& state, const char* label) {
  const auto rs = RootSystem::from_label(label);
  for (auto _ : state) {
    AffineSeries series(rs);
    benchmark::DoNotOptimize(series.matrix_M_affine().rows());
  }
}
BENCHMARK_CAPTURE(BM_AssembleMS, A2, "A2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleMS, B3, "B3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleMS, F4, "F4")->Unit(benchmark::kMillisecond);

static void BM_RatFunArithmetic(benchmark::State& state) {
  IntPoly den{1};
  for (unsigned k : {2u, 6u, 8u, 12u}) den *= IntPoly::one_minus_t_power(k);
  const RatFun a(IntPoly({1, 2, 0, 1, 3}), den);
  const RatFun b(IntPoly({0, 1, 1}), IntPoly::one_minus_t_power(10) * IntPoly::one_minus_t_power(4));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a - b);
}
BENCHMARK(BM_RatFunArithmetic);

static void BM_Expand(benchmark::State& state) {
  IntPoly den{1};
  for (unsigned k : {2u, 6u, 8u, 12u}) den *= IntPoly::one_minus_t_power(k);
  const RatFun r(IntPoly({1, 1}), den);
  for (auto _ : state) benchmark::DoNotOptimize(expand(r, unsigned(state.range(0))));
}
BENCHMARK(BM_Expand)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
