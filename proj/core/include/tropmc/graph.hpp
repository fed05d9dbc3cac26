#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropmc {

struct Edge {
  int u = 0;
  int v = 0;

  bool is_self_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Leg labels are 1-based: legs()[i] is the vertex carrying leg i+1.
using LegPair = std::pair<int, int>;

// Multigraph with labelled external legs. Parallel edges and self-loops are
// allowed. Values are immutable once built; surgeries return new graphs.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> legs,
        std::optional<LegPair> special_legs = std::nullopt);

  // Single k-valent vertex with k legs, optionally with legs 1 and 2 special.
  static Graph vertex(int k, bool beaded = false);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& legs() const noexcept { return legs_; }
  const std::optional<LegPair>& special_legs() const noexcept { return special_; }

  // Vertex carrying the leg with the given 1-based label.
  int leg_vertex(int label) const;

  // Edge ends plus legs per vertex; a self-loop counts twice.
  std::vector<int> degrees() const;
  bool is_regular(int k) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> legs_;
  std::optional<LegPair> special_;
};

// Cubical edge lengths, one per edge, each in (0,1].
class MetricAssignment {
 public:
  MetricAssignment() = default;
  MetricAssignment(const Graph& g, std::vector<double> coords);

  const std::vector<double>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const MetricAssignment&, const MetricAssignment&) = default;

 private:
  std::vector<double> coords_;
};

int component_count(const Graph& g);
bool is_connected(const Graph& g);
int loop_number(const Graph& g);

// Internal edges whose removal increases the number of components.
std::vector<int> bridges(const Graph& g);
bool is_one_particle_irreducible(const Graph& g);

// Connected, with special legs, and every bridge separates the two special legs.
bool is_beaded(const Graph& g);

// Replace the two special legs by one new edge joining their vertices.
Graph glue_special_legs(const Graph& g);

// Join a 1PI graph `a` to a beaded graph `b` by a bridge from a's leg 2 to b's
// first special leg. a's legs 3.. take the labels in `subset` (sorted, drawn
// from 3..n), b's plain legs take the remaining labels in order.
Graph concatenate_beaded(const Graph& a, const Graph& b, const std::vector<int>& subset);

Graph disjoint_union(const Graph& a, const Graph& b);

// Line format: V=<n> E=<u:v,...> LEGS=<v,...> SPECIAL=<i,j|none>
std::string to_text(const Graph& g);
Graph parse_graph(std::string_view text);

// Canonical labelling by colour refinement plus exhaustive individualisation.
// Refuses graphs with more than kCanonicalMaxVertices vertices.
inline constexpr int kCanonicalMaxVertices = 10;

struct CanonicalForm {
  std::vector<std::int32_t> code;
  // Number of vertex permutations preserving the structure (legs fixed when
  // they were included).
  std::uint64_t vertex_automorphisms = 0;
};

CanonicalForm canonical_form(const Graph& g, bool include_legs = true);
std::string canonical_key(const Graph& g, bool include_legs = true);

// |Aut(G)| with all legs fixed: vertex automorphisms times the symmetries of
// parallel edges (a!) and self-loops (2^s s!).
std::uint64_t automorphism_count(const Graph& g);

}  // namespace tropmc
