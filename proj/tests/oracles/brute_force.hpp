#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tropmc/graph.hpp"

namespace oracle {

// Sums over spanning trees by enumerating every (V-1)-subset of non-loop edges.
struct TreeSums {
  std::uint64_t count = 0;
  double u = 0.0;          // sum_T prod_{e not in T} x_e
  double u_tropical = 0.0;  // max_T prod_{e not in T} x_e
};
TreeSums enumerate_spanning_trees(const tropmc::Graph& g, std::span<const double> x);

// Straight from the definition: some connected vertex set S with
// 2 <= |S| <= V-1 has at most 4 crossing edges plus legs.
bool primitive_by_vertex_subsets(const tropmc::Graph& g);

// Random connected graph without legs: a random tree plus extra edges, some
// of them parallel. Self-loops only when `loops` is set.
tropmc::Graph random_connected_graph(std::mt19937_64& gen, int vertices, int extra_edges, bool loops = false);
// Same, but retried until no bridge is left.
tropmc::Graph random_bridgeless_graph(std::mt19937_64& gen, int vertices, int extra_edges);

std::vector<double> random_coords(std::mt19937_64& gen, std::size_t n);

// Relabel edges by `perm` (new edge i is old edge perm[i]).
tropmc::Graph permute_edges(const tropmc::Graph& g, const std::vector<int>& perm);

}  // namespace oracle
