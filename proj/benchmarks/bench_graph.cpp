#include <benchmark/benchmark.h>

#include <vector>

#include "tropmc/montecarlo.hpp"
#include "tropmc/sampler.hpp"

using namespace tropmc;

namespace {

std::vector<Graph> corpus(int loops) {
  static const auto t = CoefficientTables::build({4, 4.0, Mode::positive, 50, 4});
  Sampler sampler(t);
  Rng rng(11);
  std::vector<Graph> out;
  for (int i = 0; i < 64; ++i) out.push_back(sampler.sample_one_pi(loops, 4, rng).graph);
  return out;
}

}  // namespace

static void BM_PrimitiveFlows(benchmark::State& state) {
  const auto graphs = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive_by_flows(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_PrimitiveFlows)->Arg(6)->Arg(12)->Arg(50);

static void BM_PrimitiveCuts(benchmark::State& state) {
  const auto graphs = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive_by_cuts(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_PrimitiveCuts)->Arg(6)->Arg(12);

static void BM_PrimitiveDefault(benchmark::State& state) {
  const auto graphs = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_PrimitiveDefault)->Arg(6)->Arg(12)->Arg(50);

static void BM_CanonicalKey(benchmark::State& state) {
  const auto graphs = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalKey)->Arg(3)->Arg(6);
