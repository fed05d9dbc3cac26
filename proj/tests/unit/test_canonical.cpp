#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "tropmc/errors.hpp"
#include "tropmc/graph.hpp"

using namespace tropmc;

namespace {

Graph relabel_vertices(const Graph& g, const std::vector<int>& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({p[e.u], p[e.v]});
  std::vector<int> legs;
  for (int v : g.legs()) legs.push_back(p[v]);
  return Graph(g.vertex_count(), edges, legs, g.special_legs());
}

// Vertex permutations preserving edge multiset and leg positions.
std::uint64_t brute_vertex_automorphisms(const Graph& g) {
  auto signature = [](const Graph& h) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : h.edges()) edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(edges.begin(), edges.end());
    return std::make_pair(edges, h.legs());
  };
  const auto base = signature(g);
  std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (signature(relabel_vertices(g, p)) == base) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    Graph base = oracle::random_connected_graph(gen, n, 3, true);
    std::vector<int> legs;
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int i = 0; i < trial % 4; ++i) legs.push_back(any(gen));
    Graph g(n, base.edges(), legs);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen);
    std::vector<int> perm(static_cast<std::size_t>(g.edge_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Graph h = oracle::permute_edges(relabel_vertices(g, p), perm);
    EXPECT_EQ(canonical_key(g), canonical_key(h)) << to_text(g);
    EXPECT_EQ(automorphism_count(g), automorphism_count(h));
    EXPECT_EQ(canonical_form(g).vertex_automorphisms, brute_vertex_automorphisms(g)) << to_text(g);
  }
}

TEST(Canonical, DistinguishesLegLabels) {
  // Path a-b-c with legs 1 on a and 2 on c versus swapped: isomorphic.
  Graph g(3, {{0, 1}, {1, 2}}, {0, 2});
  Graph h(3, {{0, 1}, {1, 2}}, {2, 0});
  EXPECT_EQ(canonical_key(g), canonical_key(h));
  // Legs on different vertex types are not.
  Graph k(3, {{0, 1}, {1, 2}}, {0, 1});
  EXPECT_NE(canonical_key(g), canonical_key(k));
  EXPECT_EQ(canonical_key(g, false), canonical_key(k, false));
}

TEST(Canonical, SpecialLegsMatter) {
  Graph g(1, {{0, 0}}, {0, 0}, LegPair{1, 2});
  Graph h(1, {{0, 0}}, {0, 0});
  EXPECT_NE(canonical_key(g), canonical_key(h));
}

TEST(Automorphisms, Examples) {
  // Bubble with one leg on each vertex: swap of the two edges.
  EXPECT_EQ(automorphism_count(Graph(2, {{0, 1}, {0, 1}}, {0, 1})), 2u);
  // Vacuum theta graph: 3! edge permutations times the vertex swap.
  EXPECT_EQ(automorphism_count(Graph(2, {{0, 1}, {0, 1}, {0, 1}}, {})), 12u);
  // Tadpole vertex: the self-loop can be flipped.
  EXPECT_EQ(automorphism_count(Graph(1, {{0, 0}}, {0})), 2u);
  // Triangle with labelled legs is rigid.
  EXPECT_EQ(automorphism_count(Graph(3, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2})), 1u);
  // Unlabelled triangle: dihedral group.
  EXPECT_EQ(automorphism_count(Graph(3, {{0, 1}, {1, 2}, {2, 0}}, {})), 6u);
}

TEST(Canonical, RefusesLargeGraphs) {
  std::vector<Edge> ring;
  for (int v = 0; v < 11; ++v) ring.push_back({v, (v + 1) % 11});
  EXPECT_THROW(canonical_key(Graph(11, ring, {})), ContractError);
}
