#pragma once

#include <memory>
#include <vector>

#include "firecut/graph_spec.hpp"
#include "firecut/vertex.hpp"

namespace firecut {

/// Finite set of edges proposed for removal (sorted, duplicate-free).
struct CutSystem {
  std::vector<Edge> edges;

  static CutSystem from(std::vector<Edge> edges);
  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  bool operator==(const CutSystem&) const = default;
};

/// Lazy neighbor access to a (possibly infinite) graph. Queries are
/// read-only and may be issued concurrently after construction.
class GraphOracle {
 public:
  virtual ~GraphOracle() = default;

  virtual bool contains(const Vertex& v) const = 0;
  virtual bool is_hub(const Vertex& v) const = 0;

  /// Sorted neighbor list of `v`. Throws GraphError when `v` is not in this
  /// graph or is an infinite-degree hub.
  virtual void neighbors(const Vertex& v, std::vector<Vertex>& out) const = 0;
  std::vector<Vertex> neighbors(const Vertex& v) const;

  /// Vertices of this graph adjacent to `v`, where `v` may be a vertex of
  /// the underlying family that this graph no longer contains.
  virtual void neighbors_of_any(const Vertex& v, std::vector<Vertex>& out) const = 0;

  virtual const GraphSpec& spec() const = 0;
};

using OraclePtr = std::shared_ptr<const GraphOracle>;

OraclePtr make_oracle(std::shared_ptr<const GraphSpec> spec);

/// The induced subgraph without `removed`. Queries on removed vertices throw.
OraclePtr restrict(std::shared_ptr<const GraphSpec> spec, const VertexSet& removed);
OraclePtr restrict(OraclePtr base, std::shared_ptr<const VertexSet> removed);

/// The partial graph without the cut edges. Throws GraphError when a cut
/// edge is not an edge of the oracle's graph.
OraclePtr apply_cut(OraclePtr base, const CutSystem& cut);

}  // namespace firecut
