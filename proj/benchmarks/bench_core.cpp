#include <benchmark/benchmark.h>

#include "maedalab/density_model.hpp"
#include "maedalab/ffpoly.hpp"
#include "maedalab/galois.hpp"
#include "maedalab/hecke.hpp"
#include "maedalab/permcycles.hpp"
#include "maedalab/polyparse.hpp"

using namespace maedalab;

static void BM_DistinctDegree(benchmark::State& state) {
  const IntPolynomial f = parse_polynomial("x^12 - 3*x^7 + 5*x^2 - x + 11");
  const u64 p = 1000003;
  for (auto _ : state) benchmark::DoNotOptimize(residue_degrees(f, p));
}
BENCHMARK(BM_DistinctDegree);

static void BM_CensusEnumeration(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_bruteforce(n, 2));
}
BENCHMARK(BM_CensusEnumeration)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_T2Charpoly(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t2_charpoly(k));
}
BENCHMARK(BM_T2Charpoly)->Arg(120)->Arg(240)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_EffectiveBound(benchmark::State& state) {
  const auto B = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(effective_lower_bound(2, B, 20));
}
BENCHMARK(BM_EffectiveBound)->Arg(500)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_ChebotarevScan(benchmark::State& state) {
  const IntPolynomial f = parse_polynomial("x^5-x-1");
  ScanOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebotarev_scan(f, 2, 200000, opts));
}
BENCHMARK(BM_ChebotarevScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
