#include <benchmark/benchmark.h>

#include "tropmc/montecarlo.hpp"
#include "tropmc/sampler.hpp"
#include "tropmc/symanzik.hpp"

using namespace tropmc;

namespace {

const CoefficientTables& phi4() {
  static const auto t = CoefficientTables::build({4, 4.0, Mode::positive, 50, 4});
  return t;
}

}  // namespace

// Graph and coordinates only.
static void BM_SampleOnePi(benchmark::State& state) {
  Sampler sampler(phi4());
  Rng rng(1);
  const int loops = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_one_pi(loops, 4, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleOnePi)->Arg(5)->Arg(20)->Arg(50);

static void BM_LogUExact(benchmark::State& state) {
  Sampler sampler(phi4());
  Rng rng(2);
  auto s = sampler.sample_one_pi(static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(log_u_exact(s.graph, s.coords));
}
BENCHMARK(BM_LogUExact)->Arg(5)->Arg(20)->Arg(50);

static void BM_LogUTropical(benchmark::State& state) {
  Sampler sampler(phi4());
  Rng rng(3);
  auto s = sampler.sample_one_pi(static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(log_u_tropical(s.graph, s.coords));
}
BENCHMARK(BM_LogUTropical)->Arg(5)->Arg(20)->Arg(50);

// Full estimator per sample, single worker.
static void BM_EstimateBeta(benchmark::State& state) {
  const int loops = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RunOptions opts{1000, 7, 1};
    benchmark::DoNotOptimize(estimate_beta_prim(phi4(), loops, opts).value);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_EstimateBeta)->Arg(6)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
