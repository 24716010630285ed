#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <absl/hash/hash.h>

namespace firecut {

/// Cell (i, j) of a square lattice.
struct GridV {
  std::int64_t i = 0;
  std::int64_t j = 0;
  auto operator<=>(const GridV&) const = default;
};

/// Tile of a periodic polyomino tiling, addressed by the plane cell of its
/// anchor (lexicographically smallest cell) and its index in the
/// fundamental domain.
struct PolyV {
  std::int64_t cell_i = 0;
  std::int64_t cell_j = 0;
  std::uint32_t tile = 0;
  auto operator<=>(const PolyV&) const = default;
};

/// Vertex of an explicitly listed graph.
struct NamedV {
  std::string id;
  auto operator<=>(const NamedV&) const = default;
};

template <typename H>
H AbslHashValue(H h, const GridV& v) {
  return H::combine(std::move(h), v.i, v.j);
}
template <typename H>
H AbslHashValue(H h, const PolyV& v) {
  return H::combine(std::move(h), v.cell_i, v.cell_j, v.tile);
}
template <typename H>
H AbslHashValue(H h, const NamedV& v) {
  return H::combine(std::move(h), v.id);
}

/// A vertex of one of the supported infinite graph families. Ordering is by
/// kind (grid < polyomino < named) and then field-wise.
class Vertex {
 public:
  Vertex() = default;
  Vertex(GridV v) : value_(v) {}
  Vertex(PolyV v) : value_(v) {}
  Vertex(NamedV v) : value_(std::move(v)) {}

  static Vertex grid(std::int64_t i, std::int64_t j) { return GridV{i, j}; }
  static Vertex poly(std::int64_t ci, std::int64_t cj, std::uint32_t tile) {
    return PolyV{ci, cj, tile};
  }
  static Vertex named(std::string id) { return NamedV{std::move(id)}; }

  bool is_grid() const { return std::holds_alternative<GridV>(value_); }
  bool is_poly() const { return std::holds_alternative<PolyV>(value_); }
  bool is_named() const { return std::holds_alternative<NamedV>(value_); }

  const GridV& as_grid() const { return std::get<GridV>(value_); }
  const PolyV& as_poly() const { return std::get<PolyV>(value_); }
  const NamedV& as_named() const { return std::get<NamedV>(value_); }

  const std::variant<GridV, PolyV, NamedV>& value() const { return value_; }

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;

  template <typename H>
  friend H AbslHashValue(H h, const Vertex& v) {
    return std::visit([&](const auto& x) { return H::combine(std::move(h), v.value_.index(), x); },
                      v.value_);
  }

 private:
  std::variant<GridV, PolyV, NamedV> value_;
};

/// Human-readable form: "(i,j)", "(ci,cj;t)" or the name.
std::string to_string(const Vertex& v);

/// Undirected edge; endpoints are stored sorted so {x,y} == {y,x}.
class Edge {
 public:
  /// Throws SpecError on a self-loop.
  Edge(Vertex a, Vertex b);

  const Vertex& first() const { return first_; }
  const Vertex& second() const { return second_; }
  bool touches(const Vertex& v) const { return first_ == v || second_ == v; }
  /// The endpoint that is not `v`; `v` must be an endpoint.
  const Vertex& other(const Vertex& v) const { return first_ == v ? second_ : first_; }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;

  template <typename H>
  friend H AbslHashValue(H h, const Edge& e) {
    return H::combine(std::move(h), e.first_, e.second_);
  }

 private:
  Vertex first_;
  Vertex second_;
};

std::string to_string(const Edge& e);

using VertexSet = absl::flat_hash_set<Vertex>;
template <typename T>
using VertexMap = absl::flat_hash_map<Vertex, T>;
using EdgeSet = absl::flat_hash_set<Edge>;

/// Sorted copy of a hash set, for deterministic output.
std::vector<Vertex> sorted(const VertexSet& s);
std::vector<Edge> sorted(const EdgeSet& s);

}  // namespace firecut
