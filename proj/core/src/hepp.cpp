#include "tropmc/hepp.hpp"

#include <bit>
#include <numeric>
#include <unordered_map>

#include "tropmc/accumulator.hpp"
#include "tropmc/errors.hpp"
#include "tropmc/rng.hpp"
#include "tropmc/symanzik.hpp"

namespace tropmc {

namespace {

using Mask = std::uint64_t;

// Evaluates the recursion on edge subsets of one graph; subsets are bitmasks
// over g.edges(), and the memo only ever holds 1PI pieces.
class HeppEvaluator {
 public:
  HeppEvaluator(const Graph& g, const Rational& d, Mode mode) : g_(g), d_(d), mode_(mode) {
    if (g.vertex_count() > kCanonicalMaxVertices || g.edge_count() > 40)
      throw ContractError("exact Hepp evaluation is limited to small graphs");
  }

  Rational general(Mask mask) {
    Rational product = 1;
    for (Mask piece : pieces(mask)) {
      product *= one_pi(piece);
      if (product == 0) break;
    }
    return product;
  }

 private:
  int find(std::vector<int>& parent, int a) const {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }

  bool connected_without(Mask mask, int skip, int a, int b) const {
    std::vector<int> parent(static_cast<std::size_t>(g_.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    for (Mask m = mask; m; m &= m - 1) {
      int e = std::countr_zero(m);
      if (e == skip) continue;
      int x = find(parent, g_.edges()[e].u), y = find(parent, g_.edges()[e].v);
      if (x != y) parent[x] = y;
    }
    return find(parent, a) == find(parent, b);
  }

  // 2-edge-connected pieces of the subgraph: drop bridges, group the rest.
  std::vector<Mask> pieces(Mask mask) const {
    Mask cyclic = 0;
    for (Mask m = mask; m; m &= m - 1) {
      int e = std::countr_zero(m);
      const Edge& edge = g_.edges()[e];
      if (edge.is_self_loop() || connected_without(mask, e, edge.u, edge.v)) cyclic |= Mask{1} << e;
    }
    std::vector<int> parent(static_cast<std::size_t>(g_.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    for (Mask m = cyclic; m; m &= m - 1) {
      int e = std::countr_zero(m);
      int x = find(parent, g_.edges()[e].u), y = find(parent, g_.edges()[e].v);
      if (x != y) parent[x] = y;
    }
    std::vector<Mask> by_root(static_cast<std::size_t>(g_.vertex_count()), 0);
    for (Mask m = cyclic; m; m &= m - 1) {
      int e = std::countr_zero(m);
      by_root[find(parent, g_.edges()[e].u)] |= Mask{1} << e;
    }
    std::vector<Mask> result;
    for (Mask piece : by_root)
      if (piece) result.push_back(piece);
    return result;
  }

  Rational one_pi(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Mask touched = 0;
    for (Mask m = mask; m; m &= m - 1) {
      const Edge& e = g_.edges()[std::countr_zero(m)];
      touched |= (Mask{1} << e.u) | (Mask{1} << e.v);
    }
    const int edges = std::popcount(mask);
    const int loops = edges - std::popcount(touched) + 1;
    Rational w = edges - Rational(loops) * d_ / 2;
    Rational value = 0;
    if (w == 0 && mode_ == Mode::plain) {
      throw NonGenericDimension("omega vanishes on a subgraph, the Hepp bound diverges",
                                describe(mask));
    }
    if (mode_ == Mode::plain || w > 0) {
      for (Mask m = mask; m; m &= m - 1) value += general(mask & ~(m & -m));
      value /= w;
    }
    memo_.emplace(mask, value);
    return value;
  }

  std::string describe(Mask mask) const {
    std::vector<Edge> edges;
    for (Mask m = mask; m; m &= m - 1) edges.push_back(g_.edges()[std::countr_zero(m)]);
    return to_text(Graph(g_.vertex_count(), std::move(edges), {}));
  }

  const Graph& g_;
  Rational d_;
  Mode mode_;
  std::unordered_map<Mask, Rational> memo_;
};

}  // namespace

Rational hepp(const Graph& g, const Rational& d, Mode mode) {
  HeppEvaluator eval(g, d, mode);
  const Mask all = g.edge_count() == 64 ? ~Mask{0} : (Mask{1} << g.edge_count()) - 1;
  return eval.general(all);
}

Rational hepp_exact(const Graph& g, const Rational& d) { return hepp(g, d, Mode::plain); }

Rational hepp_positive_exact(const Graph& g, const Rational& d) {
  return hepp(g, d, Mode::positive);
}

Rational graph_omega(const Graph& g, const Rational& d) {
  Rational w = g.edge_count() - Rational(loop_number(g)) * d / 2;
  w.canonicalize();
  return w;
}

CubeEstimate hepp_cubical_mc(const Graph& g, double d, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw ContractError("need at least one sample");
  if (!is_connected(g)) throw ContractError("cube integral needs a connected graph");
  Rng rng(seed);
  Accumulator acc;
  std::vector<double> z(static_cast<std::size_t>(g.edge_count()));
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (double& x : z) x = rng.uniform_positive();
    acc.add(std::exp(-0.5 * d * log_u_tropical(g, z)));
  }
  return {acc.mean(), acc.standard_error()};
}

}  // namespace tropmc
