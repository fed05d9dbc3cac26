#pragma once

#include <gmpxx.h>

#include <span>

#include "tropmc/graph.hpp"

namespace tropmc {

struct SymanzikContext {
  double dimension = 4.0;
  double mass_ratio = 1.0;  // m^2 / mu^2
  double omega = 0.0;       // superficial degree of divergence of the sector
};

// All evaluators take strictly positive edge lengths aligned with g.edges().
// Cubical coordinates in (0,1] and projective representatives both qualify.

// log max_T prod_{e not in T} x_e, by Kruskal on ascending lengths.
double log_u_tropical(const Graph& g, std::span<const double> x);
// log sum_T prod_{e not in T} x_e, via the weighted reduced Laplacian.
double log_u_exact(const Graph& g, std::span<const double> x);
double v_tropical(const Graph& g, std::span<const double> x);
double v_exact(const Graph& g, std::span<const double> x, double mass_ratio = 1.0);

// Gamma(w+1) (U^tr/U)^{D/2} (V^tr/V)^w, assembled in log space.
double residual_f(const Graph& g, std::span<const double> x, const SymanzikContext& ctx);

inline double log_u_tropical(const Graph& g, const MetricAssignment& m) { return log_u_tropical(g, m.coords()); }
inline double log_u_exact(const Graph& g, const MetricAssignment& m) { return log_u_exact(g, m.coords()); }
inline double v_tropical(const Graph& g, const MetricAssignment& m) { return v_tropical(g, m.coords()); }
inline double v_exact(const Graph& g, const MetricAssignment& m, double mass_ratio = 1.0) {
  return v_exact(g, m.coords(), mass_ratio);
}
inline double residual_f(const Graph& g, const MetricAssignment& m, const SymanzikContext& ctx) {
  return residual_f(g, m.coords(), ctx);
}

// Exact number of spanning trees (matrix-tree theorem, fraction-free elimination).
mpz_class spanning_tree_count(const Graph& g);

}  // namespace tropmc
