#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firecut/bounds.hpp"
#include "firecut/flow.hpp"
#include "firecut/graph_oracle.hpp"

namespace firecut {

struct SolverOptions {
  /// Resource guard on the reduction network (vertices plus terminals).
  std::uint64_t node_cap = 2'000'000;
  /// Replaces the family's bounds, e.g. with a pointwise larger profile.
  std::optional<BoundsProfile> profile;
  /// Run the flow to completion instead of stopping once it exceeds the budget.
  bool exact_min_cut = false;
  /// Keep the reduction network and vertex sets in the verdict.
  bool keep_trace = false;
};

/// Network built by the lattice reduction plus the vertex sets behind it.
struct ReductionTrace {
  std::vector<Vertex> removed;         // removed set after absorbing finite components
  std::vector<Vertex> ignitions;       // ignitions still burning after that step
  std::uint64_t radius_used = 0;
  std::vector<Vertex> v_double_prime;  // ball around the ignitions (breadth-first order)
  std::vector<Vertex> v_triple_prime;  // finite components outside ball and removed set
  std::vector<Vertex> t_attached;      // sorted
  FlowNetwork network{2, 0, 1};
  std::vector<Vertex> node_to_vertex;  // entries 0 and 1 (source, sink) are placeholders
  VertexMap<std::uint32_t> vertex_to_node;
};

struct Verdict {
  bool contained = false;
  std::optional<CutSystem> cut;               // present when contained
  std::optional<std::int64_t> min_cut_value;  // present when computed exactly
  std::vector<Vertex> pre_contained;          // ignitions already enclosed by removed vertices
  std::string reason;                         // set for special outcomes
  std::optional<ReductionTrace> trace;
};

}  // namespace firecut
