#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "firecut/instance.hpp"
#include "firecut/verdict.hpp"

namespace firecut {

/// Finite-degree vertices reachable from the ignitions without passing a
/// hub, the hubs next to them, and the edges among all of these except
/// hub-hub edges.
struct HatSets {
  std::vector<Vertex> v_hat;          // sorted
  std::vector<Vertex> v_hat_inf;      // sorted
  std::vector<Edge> induced_edges;    // sorted
};

/// Breadth-first search from `ignitions` through non-hub vertices of
/// `oracle`. Throws GraphError when an ignition is a hub, and LimitError
/// when more than `explicit_limit` vertices are reached (the graph is not
/// finite outside its hubs, contrary to the encoding).
HatSets build_hat_sets(const GraphOracle& oracle, std::span<const Vertex> ignitions,
                       std::uint64_t explicit_limit);

/// Same on a hub-graph instance (removed vertices deleted first).
HatSets build_hat_sets(const Instance& instance);

struct RayfreeNetwork {
  FlowNetwork network{2, 0, 1};
  std::vector<Vertex> node_to_vertex;  // 0 and 1 are the terminals
  VertexMap<std::uint32_t> vertex_to_node;
};

/// Source to every ignition, every adjacent hub to the sink, both with a
/// capacity no finite cut reaches; unit capacity on induced edges.
RayfreeNetwork build_network_rayfree(const HatSets& hats, const Instance& instance);

/// Decides a hub-graph instance by minimum cut.
Verdict solve_rayfree(const Instance& instance, const SolverOptions& options = {});

/// True iff the cut has at most `budget` edges and no ignition can reach a
/// hub once the cut and the removed vertices are deleted.
bool verify_cut_rayfree(const Instance& instance, const CutSystem& cut);

}  // namespace firecut
