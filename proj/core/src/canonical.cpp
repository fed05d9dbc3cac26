#include <algorithm>
#include <map>
#include <tuple>

#include "tropmc/errors.hpp"
#include "tropmc/graph.hpp"

namespace tropmc {

namespace {

using Code = std::vector<std::int32_t>;

struct Prepared {
  int n = 0;
  std::vector<std::vector<int>> mult;  // off-diagonal multiplicities, diagonal = self-loops
  std::vector<int> leg_vertex;         // empty when legs are ignored
  std::optional<LegPair> special;
};

// Replace arbitrary per-vertex signatures by their rank among distinct values.
template <class Sig>
std::vector<int> rank(const std::vector<Sig>& sig) {
  std::vector<Sig> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colour(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v)
    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  return colour;
}

int count_colours(const std::vector<int>& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

std::vector<int> refine(const Prepared& p, std::vector<int> colour) {
  int classes = count_colours(colour);
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(p.n));
    for (int v = 0; v < p.n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < p.n; ++u) {
        if (u != v && p.mult[v][u] > 0) nb.emplace_back(colour[u], p.mult[v][u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(colour[v]);
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    auto next = rank(sig);
    int next_classes = count_colours(next);
    colour = std::move(next);
    if (next_classes == classes) return colour;
    classes = next_classes;
  }
}

Code encode(const Prepared& p, const std::vector<int>& position) {
  std::vector<int> at(static_cast<std::size_t>(p.n));
  for (int v = 0; v < p.n; ++v) at[position[v]] = v;
  Code code;
  code.reserve(static_cast<std::size_t>(p.n * (p.n + 1) / 2 + p.leg_vertex.size() + 4));
  code.push_back(p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = i; j < p.n; ++j) code.push_back(p.mult[at[i]][at[j]]);
  code.push_back(static_cast<std::int32_t>(p.leg_vertex.size()));
  for (int v : p.leg_vertex) code.push_back(position[v]);
  if (p.special) {
    code.push_back(p.special->first);
    code.push_back(p.special->second);
  } else {
    code.push_back(0);
    code.push_back(0);
  }
  return code;
}

struct Search {
  const Prepared& p;
  Code best;
  std::uint64_t hits = 0;

  void run(const std::vector<int>& colour) {
    const int classes = count_colours(colour);
    if (classes == p.n) {
      Code code = encode(p, colour);
      if (hits == 0 || code < best) {
        best = std::move(code);
        hits = 1;
      } else if (code == best) {
        ++hits;
      }
      return;
    }
    // First non-singleton cell, by colour index: an isomorphism invariant choice.
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (int w = 0; w < p.n; ++w) {
      if (colour[w] != target) continue;
      std::vector<std::pair<int, int>> sig(static_cast<std::size_t>(p.n));
      for (int v = 0; v < p.n; ++v) sig[v] = {colour[v], v == w ? 0 : 1};
      run(refine(p, rank(sig)));
    }
  }
};

Prepared prepare(const Graph& g, bool include_legs) {
  if (g.vertex_count() > kCanonicalMaxVertices)
    throw ContractError("canonical form is limited to small graphs");
  Prepared p;
  p.n = g.vertex_count();
  p.mult.assign(static_cast<std::size_t>(p.n), std::vector<int>(static_cast<std::size_t>(p.n), 0));
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) {
      ++p.mult[e.u][e.u];
    } else {
      ++p.mult[e.u][e.v];
      ++p.mult[e.v][e.u];
    }
  }
  if (include_legs) {
    p.leg_vertex = g.legs();
    p.special = g.special_legs();
  }
  return p;
}

std::vector<int> initial_colours(const Prepared& p) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(p.n));
  for (int v = 0; v < p.n; ++v) {
    int degree = 0;
    for (int u = 0; u < p.n; ++u)
      if (u != v) degree += p.mult[v][u];
    sig[v] = {p.mult[v][v], degree};
  }
  // Labelled legs pin vertices down; record which labels sit where.
  for (std::size_t label = 0; label < p.leg_vertex.size(); ++label)
    sig[p.leg_vertex[label]].push_back(static_cast<int>(label) + 1);
  return rank(sig);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, bool include_legs) {
  Prepared p = prepare(g, include_legs);
  Search search{p, {}, 0};
  search.run(refine(p, initial_colours(p)));
  return {std::move(search.best), search.hits};
}

std::string canonical_key(const Graph& g, bool include_legs) {
  Code code = canonical_form(g, include_legs).code;
  std::string key;
  key.reserve(code.size() * 3);
  for (std::int32_t x : code) {
    key += std::to_string(x);
    key += '.';
  }
  return key;
}

std::uint64_t automorphism_count(const Graph& g) {
  std::uint64_t count = canonical_form(g, true).vertex_automorphisms;
  std::map<std::pair<int, int>, int> mult;
  for (const Edge& e : g.edges()) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  for (auto [ends, m] : mult) {
    count *= factorial(m);
    if (ends.first == ends.second) count <<= m;
  }
  return count;
}

}  // namespace tropmc
