#include <benchmark/benchmark.h>

#include "hyperpack/hypmath.hpp"
#include "hyperpack/packing.hpp"
#include "hyperpack/volume.hpp"

using namespace hyperpack;

static void BM_Lobachevsky(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lobachevsky(Angle(x)));
    x += 1e-3;
    if (x > 3.0) x = 0.1;
  }
}
BENCHMARK(BM_Lobachevsky);

static void BM_LobachevskyQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lobachevsky_quadrature_oracle(Angle(0.7)));
}
BENCHMARK(BM_LobachevskyQuadrature);

static void BM_OrthoschemeVolume(benchmark::State& state) {
  const SchlafliParams p{7, 3, 9};
  for (auto _ : state) benchmark::DoNotOptimize(orthoscheme_volume(p));
}
BENCHMARK(BM_OrthoschemeVolume);

static void BM_Analyze(benchmark::State& state) {
  const SchlafliParams p{5, 4, 7};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(p));
}
BENCHMARK(BM_Analyze);

static void BM_OptimizeNonCongruent(benchmark::State& state) {
  const OrthoschemeData od = analyze({5, 4, 5});
  for (auto _ : state) benchmark::DoNotOptimize(optimize_noncongruent(od));
}
BENCHMARK(BM_OptimizeNonCongruent);

static void BM_ScanTwoCongruent(benchmark::State& state) {
  ScanOptions o;
  o.u = o.v = o.w = IntRange{3, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(scan_integer(o));
}
BENCHMARK(BM_ScanTwoCongruent)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_ScanRealP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_real_p(6.001, 6.999));
}
BENCHMARK(BM_ScanRealP)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
