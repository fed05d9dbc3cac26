#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "tropmc/accumulator.hpp"
#include "tropmc/graph.hpp"
#include "tropmc/tables.hpp"

namespace tropmc {

struct EstimateReport {
  std::string quantity;
  int k = 0;
  double dimension = 0.0;
  int loops = 0;
  int legs = 0;
  std::uint64_t samples = 0;
  std::uint64_t aux_hits = 0;
  double value = 0.0;
  double standard_error = 0.0;
  double normalization = 0.0;
  // Second quantity estimated from the same samples (the Hepp-weighted
  // primitive count for the beta function); empty name when unused.
  std::string secondary_quantity;
  double secondary_value = 0.0;
  double secondary_error = 0.0;
  double wall_seconds = 0.0;
};

struct RunOptions {
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  std::uint64_t chunk_size = 1 << 16;
};

// Per-chunk accumulators. `primary` carries the main integrand, `secondary`
// an auxiliary mean (zero-filled when unused).
struct ChunkResult {
  Accumulator primary;
  Accumulator secondary;

  void merge(const ChunkResult& other) {
    primary.merge(other.primary);
    secondary.merge(other.secondary);
  }
};

// Work for chunk `index` (the RNG stream id) consisting of `count` samples.
using ChunkFunction = std::function<ChunkResult(std::uint64_t index, std::uint64_t count)>;

// Splits `samples` into fixed chunks pulled by `workers` threads; results are
// merged in chunk order, so the outcome does not depend on the worker count.
// A failing chunk makes the whole run throw PartialResult.
ChunkResult run_parallel(const ChunkFunction& chunk, std::uint64_t samples, int workers,
                         std::uint64_t chunk_size);

// Z(L,n) times the mean residual function over 1PI samples; the tables must be
// plain mode. With k=3, d=3, n=3 these are the zero-momentum vertex functions.
EstimateReport estimate_one_pi(const CoefficientTables& tables, int loops, int legs,
                               const RunOptions& options, double mass_ratio = 1.0);
EstimateReport estimate_phi3_vertex(const CoefficientTables& tables, int loops, const RunOptions& options);

enum class TopNormalization {
  half_beaded,  // Z_top = B(L-1, n+2)/2, the projective gauge
  full_beaded,  // Z_top = B(L-1, n+2)
};

// Primitive phi^4 beta function at D=4 from positive-mode k=4 tables.
// value: 2 Z_top <Theta (U^tr/U)^2>, secondary: 2 Z_top <Theta>.
EstimateReport estimate_beta_prim(const CoefficientTables& tables, int loops, const RunOptions& options,
                                  TopNormalization top = TopNormalization::half_beaded);

// True when a 4-regular 1PI graph with 4 legs has no subgraph with omega <= 0
// at D=4, i.e. no connected vertex set K (other than all of V) carrying a
// cycle with at most 4 external half-edges.
bool is_primitive(const Graph& g);
// The same test by enumerating internal edge cuts of size <= 4.
bool is_primitive_by_cuts(const Graph& g);
// The same test by unit-capacity max flows on the completed graph (all legs
// joined to one extra vertex), which is 4-regular; primitive exactly when it
// has no edge cut of size <= 4 with two vertices or more on either side.
bool is_primitive_by_flows(const Graph& g);

// A priori bound on the relative error of f: (2^|E|)^{d/2} |E|^omega, with
// the spanning tree count taken as 1 for trees.
double relative_error_bound(int loops, int legs, int k, double d);

}  // namespace tropmc
