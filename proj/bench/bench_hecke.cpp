#include <benchmark/benchmark.h>

#include <random>

#include "braidpos/braid.hpp"
#include "braidpos/homfly.hpp"

namespace {

braidpos::BraidWord fixed_word(int n, int len) {
  std::mt19937 rng(static_cast<unsigned>(n * 1000 + len));
  braidpos::BraidWord w;
  w.strands = n;
  for (int k = 0; k < len; ++k)
    w.letters.push_back(braidpos::Letter::gen(1 + static_cast<int>(rng() % (n - 1)), rng() % 3 ? 1 : -1));
  return w;
}

void BM_HeckeSerial(benchmark::State& state) {
  auto w = fixed_word(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(braidpos::homfly_closed_braid_serial(w));
}

void BM_HeckeParallel(benchmark::State& state) {
  auto w = fixed_word(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(braidpos::homfly_closed_braid_parallel(w));
}

}  // namespace

BENCHMARK(BM_HeckeSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
