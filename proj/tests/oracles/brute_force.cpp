#include "brute_force.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

TreeSums enumerate_spanning_trees(const tropmc::Graph& g, std::span<const double> x) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  TreeSums out;
  const std::uint32_t limit = 1u << m;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    UnionFind uf(n);
    bool ok = true;
    double complement = 1.0;
    for (int e = 0; e < m && ok; ++e) {
      if (mask >> e & 1u) {
        const auto& edge = g.edges()[e];
        ok = uf.unite(edge.u, edge.v);
      } else {
        complement *= x[e];
      }
    }
    if (!ok) continue;
    ++out.count;
    out.u += complement;
    out.u_tropical = std::max(out.u_tropical, complement);
  }
  return out;
}

bool primitive_by_vertex_subsets(const tropmc::Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    auto inside = [&](int v) { return (s >> v & 1u) != 0; };
    int ext = 0;
    UnionFind uf(n);
    for (const auto& e : g.edges()) {
      if (inside(e.u) != inside(e.v)) ++ext;
      if (inside(e.u) && inside(e.v)) uf.unite(e.u, e.v);
    }
    for (int v : g.legs())
      if (inside(v)) ++ext;
    if (ext > 4) continue;
    int root = -1;
    bool connected = true;
    for (int v = 0; v < n && connected; ++v) {
      if (!inside(v)) continue;
      if (root < 0) root = uf.find(v);
      connected = uf.find(v) == root;
    }
    if (connected) return false;
  }
  return true;
}

tropmc::Graph random_connected_graph(std::mt19937_64& gen, int vertices, int extra_edges, bool loops) {
  std::vector<tropmc::Edge> edges;
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(gen), v});
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  for (int i = 0; i < extra_edges; ++i) {
    int a = any(gen), b = any(gen);
    while (!loops && a == b && vertices > 1) b = any(gen);
    edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), gen);
  return tropmc::Graph(vertices, edges, {});
}

tropmc::Graph random_bridgeless_graph(std::mt19937_64& gen, int vertices, int extra_edges) {
  while (true) {
    tropmc::Graph g = random_connected_graph(gen, vertices, extra_edges);
    if (tropmc::is_one_particle_irreducible(g)) return g;
  }
}

std::vector<double> random_coords(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = 1.0 - u(gen);
  return x;
}

tropmc::Graph permute_edges(const tropmc::Graph& g, const std::vector<int>& perm) {
  std::vector<tropmc::Edge> edges;
  for (int i : perm) edges.push_back(g.edges()[i]);
  return tropmc::Graph(g.vertex_count(), edges, g.legs(), g.special_legs());
}

}  // namespace oracle
