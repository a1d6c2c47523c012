#include <benchmark/benchmark.h>

#include "toric/corpus.hpp"
#include "toric/reeb.hpp"

using namespace toric;

namespace {

const MomentProfile& sample_polygon() {
  static const MomentProfile p = [] {
    Rng rng(99);
    return random_grid_polygon(rng);
  }();
  return p;
}

const std::vector<MomentProfile>& sample_corpus() {
  static const std::vector<MomentProfile> c = [] {
    auto a = monotone_corpus(5, 256);
    auto b = star_corpus(5, 256);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }();
  return c;
}

void BM_OracleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_min_oracle_serial(sample_polygon(), n));
}

void BM_OracleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_min(sample_polygon(), TminMethod::Oracle, n));
}

void BM_TminFast(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(t_min(sample_polygon(), TminMethod::Fast));
}

void BM_BatchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(batch_reports_serial(sample_corpus()));
}

void BM_BatchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(batch_reports_parallel(sample_corpus()));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TminFast)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
