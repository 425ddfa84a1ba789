// OpenMP kernels against their serial reference versions. The argument is the
// clock-shift size n (group order n^2, dimension n).

#include <benchmark/benchmark.h>

#include "qpr/classify.hpp"
#include "qpr/corpus.hpp"
#include "qpr/reference.hpp"
#include "qpr/scan.hpp"

using namespace qpr;

namespace {

WeakProjectiveRep bench_rep(const benchmark::State& state) {
  return make_clock_shift(static_cast<std::size_t>(state.range(0)));
}

void BM_Phases(benchmark::State& state) {
  const auto rep = bench_rep(state);
  for (auto _ : state) benchmark::DoNotOptimize(measured_phases(rep));
}

void BM_PhasesSerial(benchmark::State& state) {
  const auto rep = bench_rep(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::measured_phases(rep));
}

void BM_Identities(benchmark::State& state) {
  const auto rep = bench_rep(state);
  const auto ps = measured_phases(rep);
  for (auto _ : state) benchmark::DoNotOptimize(check_identities(rep, ps));
}

void BM_IdentitiesSerial(benchmark::State& state) {
  const auto rep = bench_rep(state);
  const auto ps = measured_phases(rep);
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_identities(rep, ps));
}

void BM_Central(benchmark::State& state) {
  const auto rep = bench_rep(state);
  const auto ps = measured_phases(rep);
  for (auto _ : state) benchmark::DoNotOptimize(central_deviation(rep, ps));
}

void BM_CentralSerial(benchmark::State& state) {
  const auto rep = bench_rep(state);
  const auto ps = measured_phases(rep);
  for (auto _ : state) benchmark::DoNotOptimize(reference::central_deviation(rep, ps));
}

void BM_CommutantGram(benchmark::State& state) {
  const auto rep = bench_rep(state);
  for (auto _ : state) benchmark::DoNotOptimize(detail::commutant_gram(rep));
}

void BM_CommutantGramSerial(benchmark::State& state) {
  const auto rep = bench_rep(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::commutant_gram(rep));
}

void BM_CorollaryScan(benchmark::State& state) {
  const ScanOptions opts{.seed = 1, .trials = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_corollary_scan(opts));
}

}  // namespace

BENCHMARK(BM_Phases)->DenseRange(3, 6);
BENCHMARK(BM_PhasesSerial)->DenseRange(3, 6);
BENCHMARK(BM_Identities)->DenseRange(3, 5);
BENCHMARK(BM_IdentitiesSerial)->DenseRange(3, 5);
BENCHMARK(BM_Central)->DenseRange(3, 5);
BENCHMARK(BM_CentralSerial)->DenseRange(3, 5);
BENCHMARK(BM_CommutantGram)->DenseRange(3, 5);
BENCHMARK(BM_CommutantGramSerial)->DenseRange(3, 5);
BENCHMARK(BM_CorollaryScan)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
