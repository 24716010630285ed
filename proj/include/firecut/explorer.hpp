#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "firecut/graph_oracle.hpp"

namespace firecut {

/// All vertices within `radius` of the centers.
struct Ball {
  std::vector<Vertex> centers;
  std::uint64_t radius = 0;
  std::vector<Vertex> members;        // breadth-first order
  VertexMap<std::uint64_t> distance;  // member -> distance to the centers
  std::vector<Edge> frontier_edges;   // sorted; exactly one endpoint is a member

  bool contains(const Vertex& v) const { return distance.contains(v); }
};

/// Breadth-first ball. Sources are visited in sorted order and neighbor
/// lists are sorted, so `members` is deterministic. Throws GraphError when a
/// source is not in the graph and LimitError past `member_cap` members.
Ball ball(const GraphOracle& oracle, std::span<const Vertex> sources, std::uint64_t radius,
          std::uint64_t member_cap = std::numeric_limits<std::uint64_t>::max());

struct ComponentReport {
  Vertex seed;
  bool finite = false;
  std::vector<Vertex> members;      // sorted; whole component, only when finite
  std::vector<Edge> escaping_edges;  // family edges from members to vertices outside the oracle graph
};

/// Connected component of `seed`, abandoned as soon as it is known to hold
/// more than `size_bound` vertices.
ComponentReport component_bounded(const GraphOracle& oracle, const Vertex& seed,
                                  std::uint64_t size_bound);

/// Union of the finite components (of at most `size_bound` vertices) that
/// contain a neighbor of some anchor. Anchors may lie outside the graph.
std::vector<Vertex> finite_components_near(const GraphOracle& oracle,
                                           std::span<const Vertex> anchors,
                                           std::uint64_t size_bound);

}  // namespace firecut
