#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "tropmc/errors.hpp"
#include "tropmc/montecarlo.hpp"
#include "tropmc/sampler.hpp"
#include "tropmc/symanzik.hpp"

using namespace tropmc;

namespace {

const CoefficientTables& phi3_tables() {
  static const CoefficientTables t = CoefficientTables::build({3, 3.0, Mode::plain, 5, 3});
  return t;
}

const CoefficientTables& phi4_tables() {
  static const CoefficientTables t = CoefficientTables::build({4, 4.0, Mode::positive, 20, 4});
  return t;
}

ChunkResult gaussian_chunk(std::uint64_t seed, std::uint64_t index, std::uint64_t count) {
  Rng rng(seed, index);
  ChunkResult r;
  for (std::uint64_t i = 0; i < count; ++i) r.primary.add(rng.uniform() * rng.uniform());
  return r;
}

}  // namespace

TEST(RunParallel, IndependentOfWorkerCount) {
  auto chunk = [](std::uint64_t index, std::uint64_t count) { return gaussian_chunk(5, index, count); };
  const ChunkResult one = run_parallel(chunk, 100000, 1, 1000);
  const ChunkResult four = run_parallel(chunk, 100000, 4, 1000);
  EXPECT_EQ(one.primary.count(), 100000u);
  EXPECT_EQ(one.primary.mean(), four.primary.mean());
  EXPECT_EQ(one.primary.m2(), four.primary.m2());
}

TEST(RunParallel, SingleChunkIsSerial) {
  auto chunk = [](std::uint64_t index, std::uint64_t count) { return gaussian_chunk(6, index, count); };
  const ChunkResult big = run_parallel(chunk, 5000, 3, 1 << 20);
  const ChunkResult serial = gaussian_chunk(6, 0, 5000);
  EXPECT_EQ(big.primary.mean(), serial.primary.mean());
  EXPECT_EQ(big.primary.m2(), serial.primary.m2());
}

TEST(RunParallel, Errors) {
  auto chunk = [](std::uint64_t index, std::uint64_t count) { return gaussian_chunk(1, index, count); };
  EXPECT_THROW(run_parallel(chunk, 0, 1, 10), ContractError);
  EXPECT_THROW(run_parallel(chunk, 10, 0, 10), ContractError);
  auto failing = [](std::uint64_t index, std::uint64_t count) {
    if (index == 3) throw EvaluationError("boom");
    return gaussian_chunk(1, index, count);
  };
  try {
    run_parallel(failing, 10000, 1, 1000);
    FAIL() << "expected PartialResult";
  } catch (const PartialResult& e) {
    EXPECT_EQ(e.completed(), 3000u);
  }
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(Graph(2, {{0, 1}, {0, 1}}, {0, 0, 1, 1})));
  Graph chain(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}, {0, 0, 2, 2});
  EXPECT_FALSE(is_primitive(chain));
  EXPECT_FALSE(is_primitive_by_cuts(chain));
  EXPECT_FALSE(is_primitive_by_flows(chain));
  std::vector<Edge> k4;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.push_back({a, b});
  Graph tetra(4, k4, {0, 1, 2, 3});
  EXPECT_TRUE(is_primitive(tetra));
  EXPECT_TRUE(is_primitive_by_cuts(tetra));
  EXPECT_TRUE(is_primitive_by_flows(tetra));
  EXPECT_TRUE(oracle::primitive_by_vertex_subsets(tetra));
  EXPECT_THROW(is_primitive(Graph(3, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2})), ContractError);
}

TEST(Primitive, AgreesWithVertexSubsetOracle) {
  Sampler sampler(phi4_tables());
  Rng rng(9);
  int primitive = 0;
  for (int i = 0; i < 2000; ++i) {
    auto s = sampler.sample_one_pi(1 + i % 9, 4, rng);
    const bool expected = oracle::primitive_by_vertex_subsets(s.graph);
    primitive += expected;
    EXPECT_EQ(is_primitive(s.graph), expected) << to_text(s.graph);
    EXPECT_EQ(is_primitive_by_cuts(s.graph), expected) << to_text(s.graph);
    EXPECT_EQ(is_primitive_by_flows(s.graph), expected) << to_text(s.graph);
  }
  EXPECT_GT(primitive, 100);
}

TEST(Primitive, FlowsAgreeWithCutsOnLargerGraphs) {
  Sampler sampler(phi4_tables());
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    auto s = sampler.sample_one_pi(12 + i % 5, 4, rng);
    EXPECT_EQ(is_primitive_by_flows(s.graph), is_primitive_by_cuts(s.graph)) << to_text(s.graph);
  }
}

TEST(ErrorBound, Examples) {
  for (int loops = 1; loops <= 5; ++loops) {
    EXPECT_NEAR(std::log(relative_error_bound(loops, 3, 3, 3.0)), 1.5 * loops * std::log(24.0 * loops), 1e-9);
    EXPECT_NEAR(relative_error_bound(loops, 4, 4, 4.0), std::pow(2.0, 4 * loops), 1e-6);
  }
  EXPECT_DOUBLE_EQ(relative_error_bound(0, 4, 3, 3.0), 1.0);
}

TEST(Estimators, ResidualWithinBounds) {
  Sampler sampler(phi3_tables());
  Rng rng(11);
  for (int loops = 1; loops <= 4; ++loops) {
    const double w = omega(3, 3.0, loops, 3);
    SymanzikContext ctx{3.0, 1.0, w};
    for (int i = 0; i < 300; ++i) {
      auto s = sampler.sample_one_pi(loops, 3, rng);
      const double f = residual_f(s.graph, s.coords, ctx);
      const double gam = std::tgamma(w + 1);
      const double trees = spanning_tree_count(s.graph).get_d();
      EXPECT_LE(f, gam * (1 + 1e-12));
      EXPECT_GE(f, gam * std::pow(trees, -1.5) * std::pow(s.graph.edge_count(), -w) * (1 - 1e-12));
    }
  }
}

TEST(Estimators, PhiCubedOneLoop) {
  RunOptions opts{200000, 1, 1};
  auto r = estimate_phi3_vertex(phi3_tables(), 1, opts);
  EXPECT_EQ(r.samples, 200000u);
  EXPECT_DOUBLE_EQ(r.normalization, 2.0);
  EXPECT_NEAR(r.value, 0.4431109, 4 * r.standard_error);
  EXPECT_NEAR(r.value, r.normalization * (r.value / r.normalization), 0);
}

TEST(Estimators, BetaThreeLoops) {
  RunOptions opts{200000, 2, 1};
  auto r = estimate_beta_prim(phi4_tables(), 3, opts);
  EXPECT_NEAR(r.value, 14.42497, 4 * r.standard_error);
  EXPECT_NEAR(r.secondary_value, 167.9980, 4 * r.secondary_error);
  EXPECT_GT(r.aux_hits, 0u);
  EXPECT_EQ(r.secondary_quantity, "beta_hepp_prim");
}

TEST(Estimators, Errors) {
  RunOptions opts{1000, 1, 1};
  EXPECT_THROW(estimate_one_pi(phi3_tables(), 1, 1, opts), InvalidSector);
  EXPECT_THROW(estimate_one_pi(phi3_tables(), 9, 3, opts), InvalidSector);
  EXPECT_THROW(estimate_one_pi(phi4_tables(), 1, 4, opts), ContractError);
  EXPECT_THROW(estimate_beta_prim(phi3_tables(), 1, opts), ContractError);
  RunOptions none{0, 1, 1};
  EXPECT_THROW(estimate_phi3_vertex(phi3_tables(), 1, none), ContractError);
}
