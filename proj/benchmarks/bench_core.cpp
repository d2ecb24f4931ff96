// Microbenchmarks for the enumeration and algebra hot paths, on catalog
// arrangements small enough to run in a tight loop.

#include "arq/catalog.hpp"
#include "arq/cone.hpp"
#include "arq/cordovil.hpp"
#include "arq/matroid.hpp"
#include "arq/signgeo.hpp"
#include "arq/vg.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace arq;

void BM_strict_cone_feasible(benchmark::State& state) {
  const Arrangement a = catalog_get("d4");
  std::uint64_t eps = 0;
  for (auto _ : state) {
    eps = (eps * 6364136223846793005ULL + 1442695040888963407ULL) & a.full_mask();
    benchmark::DoNotOptimize(strict_cone_feasible(a, a.full_mask(), eps).feasible);
  }
}
BENCHMARK(BM_strict_cone_feasible)->Unit(benchmark::kMicrosecond);

void BM_circuits_d4(benchmark::State& state) {
  const Arrangement a = catalog_get("d4");
  for (auto _ : state) benchmark::DoNotOptimize(circuits(a).size());
}
BENCHMARK(BM_circuits_d4)->Unit(benchmark::kMicrosecond);

void BM_chambers_d4(benchmark::State& state) {
  const Arrangement a = catalog_get("d4");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(a).size());
}
BENCHMARK(BM_chambers_d4)->Unit(benchmark::kMillisecond);

void BM_sigma2_d4(benchmark::State& state) {
  const Arrangement a = catalog_get("d4");
  for (auto _ : state) benchmark::DoNotOptimize(count_sigma(a, 2));
}
BENCHMARK(BM_sigma2_d4)->Unit(benchmark::kMillisecond);

void BM_vg_dim_x2(benchmark::State& state) {
  const Arrangement a = catalog_get("x2");
  for (auto _ : state) benchmark::DoNotOptimize(dim_vg_k(a, 2));
}
BENCHMARK(BM_vg_dim_x2)->Unit(benchmark::kMicrosecond);

void BM_cordovil_report_x2(benchmark::State& state) {
  const Arrangement a = catalog_get("x2");
  for (auto _ : state) benchmark::DoNotOptimize(cordovil_report(a).quadratic);
}
BENCHMARK(BM_cordovil_report_x2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
