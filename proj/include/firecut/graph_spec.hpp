#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "firecut/cnf.hpp"
#include "firecut/tiling.hpp"
#include "firecut/vertex.hpp"

namespace firecut {

/// Upper bound on vertex degrees, or "unbounded" for graphs with
/// infinite-degree vertices.
class MaxDegree {
 public:
  static MaxDegree finite(std::uint64_t d) { return MaxDegree(d, false); }
  static MaxDegree unbounded() { return MaxDegree(0, true); }
  bool is_finite() const { return !unbounded_; }
  /// Throws GraphError when unbounded.
  std::uint64_t value() const;
  bool operator==(const MaxDegree&) const = default;

 private:
  MaxDegree(std::uint64_t d, bool u) : value_(d), unbounded_(u) {}
  std::uint64_t value_;
  bool unbounded_;
};

class GraphSpec;

struct InfiniteGrid {};

/// Square grid plus the (x,y)-(x+1,y+1) diagonals (`main`) and/or the
/// (x,y)-(x+1,y-1) diagonals (`anti`).
struct DiagonalGrid {
  bool main = false;
  bool anti = false;
};

struct PolyominoGrid {
  PeriodicTiling tiling;
};

/// A lattice family with finitely many additional edges, each joining
/// vertices at base distance at most `max_span`.
struct ExtraEdges {
  std::shared_ptr<const GraphSpec> base;
  std::vector<Edge> extras;
  std::uint32_t max_span = 1;
  VertexMap<std::vector<Vertex>> incident;
};

/// Finite explicit graph whose `hubs` have, in addition to their explicit
/// edges, infinitely many pendant finite trees that are never enumerated.
struct HubGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  VertexSet hubs;
  VertexMap<std::vector<Vertex>> adjacency;
};

/// Star with center "o" and one leaf per truth assignment of `f`'s
/// variables; leaves whose assignment satisfies `f` carry an infinite
/// tail, and `extra_ray` adds one more infinite ray at the center.
///
/// Vertex names: "o", "x:<bits>" (character k-1 is variable k),
/// "x:<bits>/k" for the k-th tail vertex, "ray/k" for the extra ray.
struct StarOfSubsets {
  Cnf f;
  bool extra_ray = true;
};

/// Finite description of one infinite graph.
class GraphSpec {
 public:
  using Family =
      std::variant<InfiniteGrid, DiagonalGrid, PolyominoGrid, ExtraEdges, HubGraph, StarOfSubsets>;

  static GraphSpec infinite_grid();
  static GraphSpec diagonal_grid(bool main, bool anti);
  static GraphSpec polyomino_grid(PeriodicTiling tiling);
  /// Throws SpecError when an extra edge is a loop, duplicates an existing
  /// edge, leaves the base graph, or spans more than `max_span`.
  static GraphSpec extra_edges(GraphSpec base, std::vector<Edge> extras, std::uint32_t max_span);
  /// Throws SpecError when an edge names an undeclared vertex (the explicit
  /// part must be closed), on duplicates, or on undeclared hubs.
  static GraphSpec hub_graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::vector<Vertex> hubs);
  static GraphSpec star_of_subsets(Cnf f, bool extra_ray);

  const Family& family() const { return family_; }
  /// Tag used in instance files: grid, diagonal_grid, polyomino_grid,
  /// extra_edges, hub_graph, star_of_subsets.
  std::string family_name() const;

  /// Grid, diagonal grid, polyomino grid, or extra edges over one of them.
  bool is_lattice_family() const;

  bool contains(const Vertex& v) const;
  bool is_hub(const Vertex& v) const;

  /// Sorted, duplicate-free neighbor list. Throws GraphError when `v` is
  /// not a vertex of the graph or is an infinite-degree hub.
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const;
  std::vector<Vertex> neighbors(const Vertex& v) const;

  /// Explicit (finite) neighbor list of a hub.
  std::vector<Vertex> hub_explicit_neighbors(const Vertex& hub) const;

  MaxDegree max_degree() const;

 private:
  explicit GraphSpec(Family f) : family_(std::move(f)) {}
  Family family_;
};

}  // namespace firecut
