#include "tropmc/symanzik.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tropmc/errors.hpp"

namespace tropmc {

namespace {

void check_lengths(const Graph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.edge_count()))
    throw ContractError("coordinate count differs from edge count");
}

int find(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

}  // namespace

double log_u_tropical(const Graph& g, std::span<const double> x) {
  check_lengths(g, x);
  const int m = g.edge_count();
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return x[a] < x[b] || (x[a] == x[b] && a < b);
  });
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  double log_complement = 0.0;
  int tree_edges = 0;
  for (int e : order) {
    const Edge& edge = g.edges()[e];
    int a = find(parent, edge.u);
    int b = find(parent, edge.v);
    if (a != b) {
      parent[a] = b;
      ++tree_edges;
    } else {
      log_complement += std::log(x[e]);
    }
  }
  if (tree_edges != g.vertex_count() - 1)
    throw EvaluationError("graph is disconnected, no spanning tree: " + to_text(g));
  return log_complement;
}

double log_u_exact(const Graph& g, std::span<const double> x) {
  check_lengths(g, x);
  const int n = g.vertex_count() - 1;  // the last vertex is grounded
  if (n < 0) throw EvaluationError("graph without vertices has no spanning tree");
  std::vector<double> w(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::vector<double> ground(static_cast<std::size_t>(n), 0.0);
  double log_prefactor = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    log_prefactor += std::log(x[e]);
    const Edge& edge = g.edges()[e];
    if (edge.is_self_loop()) continue;
    const double weight = 1.0 / x[e];
    if (edge.u == n) {
      ground[edge.v] += weight;
    } else if (edge.v == n) {
      ground[edge.u] += weight;
    } else {
      w[edge.u * n + edge.v] += weight;
      w[edge.v * n + edge.u] += weight;
    }
  }
  // Schur complements of a Laplacian stay Laplacians: keep the non-negative
  // off-diagonal weights and the weight to ground, and never subtract.
  double log_det = 0.0;
  for (int p = 0; p < n; ++p) {
    double pivot = ground[p];
    for (int u = p + 1; u < n; ++u) pivot += w[p * n + u];
    if (!(pivot > 0.0) || !std::isfinite(pivot))
      throw EvaluationError("singular reduced Laplacian for graph " + to_text(g));
    log_det += std::log(pivot);
    for (int u = p + 1; u < n; ++u) {
      const double wu = w[u * n + p];
      if (wu == 0.0) continue;
      const double scaled = wu / pivot;
      ground[u] += scaled * ground[p];
      for (int v = p + 1; v < n; ++v) {
        if (v != u) w[u * n + v] += scaled * w[p * n + v];
      }
    }
  }
  return log_prefactor + log_det;
}

double v_tropical(const Graph& g, std::span<const double> x) {
  check_lengths(g, x);
  if (x.empty()) throw EvaluationError("V^tr is undefined for an edgeless graph");
  return *std::max_element(x.begin(), x.end());
}

double v_exact(const Graph& g, std::span<const double> x, double mass_ratio) {
  check_lengths(g, x);
  return mass_ratio * std::accumulate(x.begin(), x.end(), 0.0);
}

double residual_f(const Graph& g, std::span<const double> x, const SymanzikContext& ctx) {
  if (!(ctx.mass_ratio > 0.0)) throw ContractError("mass ratio must be positive");
  if (!(ctx.omega > -1.0)) throw ContractError("residual function needs omega > -1");
  const double log_u_ratio = log_u_tropical(g, x) - log_u_exact(g, x);
  double log_f = std::lgamma(ctx.omega + 1.0) + 0.5 * ctx.dimension * log_u_ratio;
  if (ctx.omega != 0.0)
    log_f += ctx.omega * (std::log(v_tropical(g, x)) - std::log(v_exact(g, x, ctx.mass_ratio)));
  return std::exp(log_f);
}

mpz_class spanning_tree_count(const Graph& g) {
  const int n = g.vertex_count() - 1;
  if (n < 0) return 0;
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) continue;
    if (e.u < n) a[e.u][e.u] += 1;
    if (e.v < n) a[e.v][e.v] += 1;
    if (e.u < n && e.v < n) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  // Bareiss fraction-free elimination.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? mpz_class(1) : mpz_class(sign * a[n - 1][n - 1]);
}

}  // namespace tropmc
