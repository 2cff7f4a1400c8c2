// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "solfour/classify/invariant.hpp"
#include "solfour/gl2z/kernels.hpp"

using namespace solfour;
namespace k = solfour::gl2z::kernels;

namespace {

const IntMatrix kSwap{{0, 1}, {1, 0}};
const IntMatrix kReflection{{1, 0}, {0, -1}};
const IntMatrix kHyp{{3, 2}, {4, 3}};

// No conjugator exists, so both searches scan the whole box.
void BM_ConjugatorSerial(benchmark::State& st) {
  const int bound = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::first_conjugator(kSwap, kReflection, bound));
}

void BM_ConjugatorParallel(benchmark::State& st) {
  const int bound = static_cast<int>(st.range(0));
  const auto box = k::unimodular_box(bound);
  const auto m = *k::to_small(kSwap);
  const auto n = *k::to_small(kReflection);
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::first_conjugator(box, m, n));
}

void BM_CentralizerSerial(benchmark::State& st) {
  const int bound = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::centralizer(kHyp, bound));
}

void BM_CentralizerParallel(benchmark::State& st) {
  const int bound = static_cast<int>(st.range(0));
  const auto box = k::unimodular_box(bound);
  const auto m = *k::to_small(kHyp);
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::centralizer(box, m));
}

void BM_EnumerateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(classify::serial::enumerate(st.range(0)));
}

void BM_EnumerateParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(classify::enumerate(st.range(0)));
}

}  // namespace

BENCHMARK(BM_ConjugatorSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugatorParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CentralizerSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CentralizerParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(65)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(65)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
