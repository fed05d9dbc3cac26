#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropmc/graph.hpp"
#include "tropmc/rational.hpp"
#include "tropmc/sector.hpp"

namespace tropmc {

// Exact Hepp bound by the edge-deletion recursion, factorised over 1PI pieces.
// Throws NonGenericDimension if a piece with omega = 0 is reached.
Rational hepp_exact(const Graph& g, const Rational& d);

// Same recursion, but any 1PI piece with omega <= 0 contributes 0.
Rational hepp_positive_exact(const Graph& g, const Rational& d);

Rational hepp(const Graph& g, const Rational& d, Mode mode);

// omega = |E| - d L / 2 of a connected graph.
Rational graph_omega(const Graph& g, const Rational& d);

struct CubeEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Plain Monte Carlo of the unit-cube integral of 1/U^tr(z)^{d/2}.
CubeEstimate hepp_cubical_mc(const Graph& g, double d, std::uint64_t samples, std::uint64_t seed);

// One isomorphism class of connected 1PI k-regular graphs with labelled legs.
struct EnsembleClass {
  Graph representative;
  std::string key;  // canonical key with legs
  Rational weight;  // sum of labelled-configuration weights, equals 1/|Aut|
};

// All isomorphism classes of the (loops, legs) 1PI ensemble, sorted by key.
// Generated as labelled multigraphs weighted by the Wick contraction count.
std::vector<EnsembleClass> enumerate_ensemble(int k, int loops, int legs);

// sum over the ensemble of hepp(G)/|Aut(G)|, exactly.
Rational ensemble_sum_oracle(int k, const Rational& d, int loops, int legs, Mode mode);

// The same sum by brute force over half-edge pairings, divided by V!(k!)^V.
// Only feasible for a handful of vertices; used to cross-check the above.
Rational ensemble_sum_by_pairings(int k, const Rational& d, int loops, int legs, Mode mode);

}  // namespace tropmc
