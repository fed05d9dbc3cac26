#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "tropmc/errors.hpp"
#include "tropmc/graph.hpp"

using namespace tropmc;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}, {}); }
Graph bubble(int legs_each = 0) {
  std::vector<int> legs;
  for (int i = 0; i < legs_each; ++i) legs.push_back(0);
  for (int i = 0; i < legs_each; ++i) legs.push_back(1);
  return Graph(2, {{0, 1}, {0, 1}}, legs);
}

}  // namespace

TEST(Graph, ValidatesInput) {
  EXPECT_THROW(Graph(2, {{0, 2}}, {}), ContractError);
  EXPECT_THROW(Graph(2, {{0, 1}}, {3}), ContractError);
  EXPECT_THROW(Graph(2, {{0, 1}}, {0, 1}, LegPair{1, 1}), ContractError);
  EXPECT_THROW(Graph(2, {{0, 1}}, {0, 1}, LegPair{1, 3}), ContractError);
  EXPECT_NO_THROW(Graph(1, {{0, 0}}, {0, 0}, LegPair{1, 2}));
}

TEST(Graph, Degrees) {
  Graph g(1, {{0, 0}}, {0});
  EXPECT_EQ(g.degrees(), std::vector<int>{3});
  EXPECT_TRUE(g.is_regular(3));
  EXPECT_TRUE(Graph::vertex(4).is_regular(4));
  EXPECT_EQ(Graph::vertex(3, true).special_legs(), (LegPair{1, 2}));
}

TEST(Graph, MetricAssignmentRange) {
  Graph g = bubble();
  EXPECT_THROW(MetricAssignment(g, {0.5}), ContractError);
  EXPECT_THROW(MetricAssignment(g, {0.0, 0.5}), ContractError);
  EXPECT_THROW(MetricAssignment(g, {1.5, 0.5}), ContractError);
  EXPECT_NO_THROW(MetricAssignment(g, {1.0, 1e-300}));
}

TEST(LoopNumber, Examples) {
  EXPECT_EQ(loop_number(Graph(1, {}, {})), 0);
  EXPECT_EQ(loop_number(triangle()), 1);
  EXPECT_EQ(loop_number(Graph(2, {{0, 1}, {0, 1}, {0, 1}}, {})), 2);
  EXPECT_EQ(loop_number(disjoint_union(triangle(), triangle())), 2);
}

TEST(OnePI, Examples) {
  EXPECT_TRUE(is_one_particle_irreducible(bubble()));
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}, {});
  EXPECT_FALSE(is_one_particle_irreducible(two_triangles));
  EXPECT_TRUE(is_one_particle_irreducible(Graph::vertex(3)));
  EXPECT_FALSE(is_one_particle_irreducible(disjoint_union(bubble(), bubble())));
}

TEST(Bridges, Examples) {
  EXPECT_TRUE(bridges(triangle()).empty());
  Graph path(3, {{0, 1}, {1, 2}}, {});
  EXPECT_EQ(bridges(path), (std::vector<int>{0, 1}));
  Graph pendant(3, {{0, 1}, {0, 1}, {1, 2}}, {});
  EXPECT_EQ(bridges(pendant), std::vector<int>{2});
  // Parallel edges are never bridges, self-loops neither.
  Graph loop_on_path(2, {{0, 0}, {0, 1}}, {});
  EXPECT_EQ(bridges(loop_on_path), std::vector<int>{1});
}

TEST(Bridges, EmptyIffOnePIOnConnectedRandomGraphs) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected_graph(gen, 2 + trial % 7, trial % 5, trial % 3 == 0);
    EXPECT_EQ(bridges(g).empty(), is_one_particle_irreducible(g)) << to_text(g);
    // A bridge is exactly an edge whose deletion disconnects.
    auto b = bridges(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      std::vector<Edge> rest = g.edges();
      rest.erase(rest.begin() + e);
      const bool is_bridge = !is_connected(Graph(g.vertex_count(), rest, {}));
      EXPECT_EQ(is_bridge, std::find(b.begin(), b.end(), e) != b.end()) << to_text(g) << " edge " << e;
    }
  }
}

TEST(GlueSpecialLegs, BeadedVertex) {
  Graph g = glue_special_legs(Graph::vertex(3, true));
  EXPECT_EQ(g, Graph(1, {{0, 0}}, {0}));
  EXPECT_FALSE(g.special_legs().has_value());
}

TEST(GlueSpecialLegs, BeadedPathBecomesBubble) {
  // Each vertex has one special and one plain leg.
  Graph path(2, {{0, 1}}, {0, 1, 0, 1}, LegPair{1, 2});
  ASSERT_TRUE(is_beaded(path));
  Graph g = glue_special_legs(path);
  EXPECT_EQ(g, Graph(2, {{0, 1}, {0, 1}}, {0, 1}));
  EXPECT_TRUE(is_one_particle_irreducible(g));
}

TEST(GlueSpecialLegs, CountsAndOrder) {
  Graph path(2, {{0, 1}}, {0, 1, 0, 1}, LegPair{3, 2});
  Graph g = glue_special_legs(path);
  EXPECT_EQ(g.edge_count(), path.edge_count() + 1);
  EXPECT_EQ(g.leg_count(), path.leg_count() - 2);
  EXPECT_EQ(g.edges().back(), (Edge{0, 1}));
  EXPECT_EQ(g.legs(), (std::vector<int>{0, 1}));
  EXPECT_EQ(loop_number(g), loop_number(path) + 1);
  EXPECT_THROW(glue_special_legs(triangle()), ContractError);
}

TEST(ConcatenateBeaded, VertexOntoBeadedVertex) {
  Graph a = Graph::vertex(3);
  Graph b = Graph::vertex(3, true);
  Graph g = concatenate_beaded(a, b, {3});
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.leg_count(), a.leg_count() + b.leg_count() - 2);
  EXPECT_EQ(loop_number(g), 0);
  EXPECT_TRUE(is_beaded(g));
  // Leg 3 is a's third leg, leg 4 is b's plain leg.
  EXPECT_EQ(g.legs(), (std::vector<int>{0, 1, 0, 1}));
  Graph swapped = concatenate_beaded(a, b, {4});
  EXPECT_EQ(swapped.legs(), (std::vector<int>{0, 1, 1, 0}));
}

TEST(ConcatenateBeaded, LoopsAddUp) {
  Graph a(2, {{0, 1}, {0, 1}}, {0, 1});  // 1-loop bubble with two legs
  Graph b = Graph(1, {{0, 0}}, {0, 0, 0, 0}, LegPair{1, 2});
  Graph g = concatenate_beaded(a, b, {});
  EXPECT_EQ(loop_number(g), loop_number(a) + loop_number(b));
  EXPECT_EQ(g.leg_count(), 4);
  EXPECT_TRUE(is_beaded(g));
}

TEST(ConcatenateBeaded, RejectsBadAssignments) {
  Graph a = Graph::vertex(3);
  Graph b = Graph::vertex(3, true);
  EXPECT_THROW(concatenate_beaded(a, b, {}), ContractError);
  EXPECT_THROW(concatenate_beaded(a, b, {5}), ContractError);
  EXPECT_THROW(concatenate_beaded(a, Graph::vertex(3), {3}), ContractError);
  EXPECT_THROW(concatenate_beaded(Graph(1, {{0, 0}}, {0}), b, {}), ContractError);
}

TEST(Beaded, Definition) {
  EXPECT_TRUE(is_beaded(Graph::vertex(3, true)));
  EXPECT_FALSE(is_beaded(Graph::vertex(3)));
  // A bridge that does not separate the special legs.
  Graph g(3, {{0, 1}, {0, 1}, {1, 2}}, {0, 0, 2, 2, 2}, LegPair{1, 2});
  EXPECT_FALSE(is_beaded(g));
}

TEST(TextFormat, RoundTrip) {
  Graph g(3, {{0, 1}, {1, 2}, {2, 2}}, {0, 0, 1}, LegPair{2, 3});
  EXPECT_EQ(to_text(g), "V=3 E=0:1,1:2,2:2 LEGS=0,0,1 SPECIAL=2,3");
  EXPECT_EQ(parse_graph(to_text(g)), g);
  Graph v = Graph::vertex(3);
  EXPECT_EQ(to_text(v), "V=1 E= LEGS=0,0,0 SPECIAL=none");
  EXPECT_EQ(parse_graph(to_text(v)), v);
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(parse_graph("V=2 E=0:1"), FormatError);
  EXPECT_THROW(parse_graph("V=2 E=0-1 LEGS= SPECIAL=none"), FormatError);
  EXPECT_THROW(parse_graph("V=x E= LEGS= SPECIAL=none"), FormatError);
  EXPECT_THROW(parse_graph("V=2 E=0:5 LEGS= SPECIAL=none"), FormatError);
}
