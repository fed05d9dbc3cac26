#include <algorithm>
#include <bit>
#include <numeric>

#include "tropmc/errors.hpp"
#include "tropmc/montecarlo.hpp"

namespace tropmc {

namespace {

void check_phi4_four_point(const Graph& g) {
  if (!g.is_regular(4) || g.leg_count() != 4 || !is_one_particle_irreducible(g))
    throw ContractError("primitivity is defined for 4-regular 1PI graphs with 4 legs");
}

// ext(K) = 4|K| - 2 e(K) for a vertex set K of a 4-regular graph, where e(K)
// counts the internal edges (self-loops included) inside K. omega(K) <= 0 at
// D=4 exactly when ext(K) <= 4.
bool divergent(int size, int inner_edges, bool has_self_loop) {
  const bool has_cycle = size >= 2 || has_self_loop;
  return has_cycle && 4 * size - 2 * inner_edges <= 4;
}

bool primitive_by_vertex_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) continue;
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t s = 1; s < all; ++s) {
    int inner = 0;
    bool loop = false;
    for (const Edge& e : g.edges()) {
      if ((s >> e.u & 1u) && (s >> e.v & 1u)) {
        ++inner;
        loop |= e.is_self_loop();
      }
    }
    if (!divergent(std::popcount(s), inner, loop)) continue;
    std::uint32_t reach = s & -s;
    while (true) {
      std::uint32_t next = reach;
      for (std::uint32_t r = reach; r; r &= r - 1) next |= adj[std::countr_zero(r)] & s;
      if (next == reach) break;
      reach = next;
    }
    if (reach == s) return false;
  }
  return true;
}

}  // namespace

bool is_primitive_by_cuts(const Graph& g) {
  check_phi4_four_point(g);
  const int n = g.vertex_count();
  std::vector<int> candidates;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.edges()[e].is_self_loop()) candidates.push_back(e);
  const int m = static_cast<int>(candidates.size());

  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> size(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
  std::vector<char> loop(static_cast<std::size_t>(n));
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Does removing the marked edges leave a divergent component?
  auto cut_finds_subdivergence = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (removed[e]) continue;
      int a = find(g.edges()[e].u), b = find(g.edges()[e].v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) return false;
    std::fill(size.begin(), size.end(), 0);
    std::fill(inner.begin(), inner.end(), 0);
    std::fill(loop.begin(), loop.end(), 0);
    for (int v = 0; v < n; ++v) ++size[find(v)];
    for (const Edge& e : g.edges()) {
      int a = find(e.u);
      if (a == find(e.v)) {
        ++inner[a];
        loop[a] |= e.is_self_loop();
      }
    }
    for (int v = 0; v < n; ++v) {
      if (parent[v] == v && size[v] < n && divergent(size[v], inner[v], loop[v])) return true;
    }
    return false;
  };

  // Lexicographic subsets of size 1..4.
  std::vector<int> pick;
  for (int c = 1; c <= 4 && c <= m; ++c) {
    pick.resize(static_cast<std::size_t>(c));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int i : pick) removed[candidates[i]] = 1;
      const bool hit = cut_finds_subdivergence();
      for (int i : pick) removed[candidates[i]] = 0;
      if (hit) return false;
      int i = c - 1;
      while (i >= 0 && pick[i] == m - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

bool is_primitive_by_flows(const Graph& g) {
  check_phi4_four_point(g);
  const int n = g.vertex_count();
  for (const Edge& e : g.edges())
    if (e.is_self_loop()) return false;
  if (n < 2) return true;

  // Completed graph: vertex n collects the legs.
  const int N = n + 1;
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(N));
  auto link = [&](int a, int b) {
    arcs[a].push_back({b, static_cast<int>(arcs[b].size()), 1});
    arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 1});
  };
  for (const Edge& e : g.edges()) link(e.u, e.v);
  for (int v : g.legs()) link(v, n);

  // A parallel pair {u, v} already has only 4 external half-edges.
  if (N >= 4) {
    for (int v = 0; v < N; ++v) {
      std::vector<int> seen;
      for (const Arc& a : arcs[v]) {
        if (std::find(seen.begin(), seen.end(), a.to) != seen.end()) return false;
        seen.push_back(a.to);
      }
    }
  }

  // Every small nontrivial cut keeps vertex 0 together with one of its
  // neighbours: if all four edges at 0 crossed, 0 alone would be a side.
  std::vector<int> parent_arc(static_cast<std::size_t>(N)), parent(static_cast<std::size_t>(N));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(N));
  std::vector<char> source(static_cast<std::size_t>(N));
  std::vector<int> neighbours;
  for (const Arc& a : arcs[0])
    if (std::find(neighbours.begin(), neighbours.end(), a.to) == neighbours.end()) neighbours.push_back(a.to);

  auto reset = [&]() {
    for (auto& list : arcs)
      for (Arc& a : list) a.cap = 1;
  };
  // BFS in the residual graph from the source pair; returns whether t was hit.
  auto search = [&](int t) {
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    for (int v = 0; v < N; ++v) {
      if (source[v]) {
        parent[v] = v;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
        const Arc& a = arcs[v][i];
        if (a.cap == 0 || parent[a.to] != -1) continue;
        parent[a.to] = v;
        parent_arc[a.to] = i;
        if (a.to == t) return true;
        queue.push_back(a.to);
      }
    }
    return false;
  };

  for (int x : neighbours) {
    std::fill(source.begin(), source.end(), 0);
    source[0] = source[x] = 1;
    for (int t = 0; t < N; ++t) {
      if (source[t]) continue;
      reset();
      int flow = 0;
      while (flow <= 4 && search(t)) {
        for (int v = t; !source[v]; v = parent[v]) {
          Arc& a = arcs[parent[v]][parent_arc[v]];
          a.cap -= 1;
          arcs[v][a.rev].cap += 1;
        }
        ++flow;
      }
      if (flow > 4) continue;
      // The last search left the smallest source side marked in parent.
      const int source_side = static_cast<int>(std::count_if(parent.begin(), parent.end(), [](int p) { return p != -1; }));
      if (N - source_side >= 2) return false;
    }
  }
  return true;
}

bool is_primitive(const Graph& g) {
  check_phi4_four_point(g);
  // Enumerating vertex sets only beats the flow test on the smallest graphs.
  if (g.vertex_count() <= 6) return primitive_by_vertex_sets(g);
  return is_primitive_by_flows(g);
}

}  // namespace tropmc
