#include <benchmark/benchmark.h>

#include "tropmc/tables.hpp"

using namespace tropmc;

static void BM_BuildPhi4Positive(benchmark::State& state) {
  const int loops = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = CoefficientTables::build({4, 4.0, Mode::positive, loops, 4});
    benchmark::DoNotOptimize(t.z(loops, 4));
  }
}
BENCHMARK(BM_BuildPhi4Positive)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_BuildPhi3Plain(benchmark::State& state) {
  const int loops = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = CoefficientTables::build({3, 3.0, Mode::plain, loops, 3});
    benchmark::DoNotOptimize(t.z(loops, 3));
  }
}
BENCHMARK(BM_BuildPhi3Plain)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
