#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "firecut/graph_oracle.hpp"
#include "firecut/graph_spec.hpp"

namespace firecut {

/// A containment question: can `budget` edge removals leave every ignition
/// vertex in a finite component of `graph` minus `removed`?
struct Instance {
  std::shared_ptr<const GraphSpec> graph;
  std::vector<Vertex> removed;    // sorted, unique
  std::vector<Vertex> ignitions;  // sorted, unique
  std::uint64_t budget = 0;

  /// Sorts and deduplicates the vertex lists.
  void normalize();

  /// Throws SpecError when an ignition is removed or absent, a removed vertex
  /// is absent, or a count exceeds the instance size.
  void validate() const;

  VertexSet removed_set() const { return VertexSet(removed.begin(), removed.end()); }
};

/// Length of the canonical serialized form, used as the instance size n.
std::size_t instance_size(const Instance& instance);

}  // namespace firecut
