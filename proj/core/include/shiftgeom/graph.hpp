#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shiftgeom/rational.hpp"

namespace shiftgeom::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

struct Components {
  /// Component index of every node. Components are numbered in reverse
  /// topological order: every edge goes from a higher index to a lower or
  /// equal one.
  std::vector<std::size_t> of;
  std::vector<std::vector<std::size_t>> members;
  /// Whether the component contains a cycle (an internal edge).
  std::vector<bool> cyclic;
};

Components strongly_connected(const Adjacency& adj);

/// Nodes reachable from `sources` (including them).
std::vector<bool> reachable(const Adjacency& adj, const std::vector<std::size_t>& sources);

struct WeightedEdge {
  std::size_t from;
  std::size_t to;
  std::int64_t weight;
};

struct MeanCycle {
  Rational mean;
  /// Indices into the edge list, in traversal order.
  std::vector<std::size_t> cycle;
};

/// Minimum mean cycle of a strongly connected graph with at least one edge
/// (Karp), together with one cycle attaining it.
MeanCycle minimum_mean_cycle(std::size_t nodes, const std::vector<WeightedEdge>& edges);

/// gcd of cycle lengths of a strongly connected graph.
std::size_t period(const Adjacency& adj);

}  // namespace shiftgeom::graph
