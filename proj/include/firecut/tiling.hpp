#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "firecut/vertex.hpp"

namespace firecut {

/// Unit square of the plane, also used as an integer 2-vector.
struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;
  auto operator<=>(const Cell&) const = default;
  Cell operator+(Cell o) const { return {i + o.i, j + o.j}; }
  Cell operator-(Cell o) const { return {i - o.i, j - o.j}; }
};

/// A tiling of the plane by translates of finitely many polyominoes.
///
/// The tiles together form one fundamental domain of the lattice spanned by
/// the two period vectors; every plane cell is covered by exactly one
/// translate of one tile. A tile copy is identified by the plane position
/// of its anchor (its lexicographically smallest cell) and its tile index.
class PeriodicTiling {
 public:
  /// Validates and builds the lookup tables. Throws SpecError when the
  /// periods are dependent, a tile is empty, disconnected, or larger than
  /// `max_tile_size`, or the tiles do not partition a fundamental domain.
  static PeriodicTiling create(Cell period_a, Cell period_b,
                               std::vector<std::vector<Cell>> tiles,
                               std::uint32_t max_tile_size);

  Cell period_a() const { return period_a_; }
  Cell period_b() const { return period_b_; }
  const std::vector<std::vector<Cell>>& tiles() const { return tiles_; }
  std::uint32_t tile_count() const { return static_cast<std::uint32_t>(tiles_.size()); }
  std::uint32_t max_tile_size() const { return max_tile_size_; }
  Cell anchor(std::uint32_t tile) const { return anchors_.at(tile); }

  /// Tile copy covering plane cell `c`.
  PolyV owner(Cell c) const;
  bool contains(const PolyV& v) const;
  /// Plane cells of a tile copy; `v` must be valid.
  std::vector<Cell> cells(const PolyV& v) const;
  /// Edge-adjacent tile copies, sorted, without duplicates.
  void neighbors(const PolyV& v, std::vector<Vertex>& out) const;
  /// Most unit edges shared by two adjacent tile copies.
  std::uint32_t max_shared_edges() const { return max_shared_; }

 private:
  PeriodicTiling() = default;
  std::size_t residue_index(Cell c) const;
  Cell reduce(Cell c) const;

  Cell period_a_;
  Cell period_b_;
  std::vector<std::vector<Cell>> tiles_;
  std::vector<Cell> anchors_;
  std::uint32_t max_tile_size_ = 1;
  std::uint32_t max_shared_ = 1;
  // Hermite basis of the period lattice: (hnf_a_, 0) and (hnf_b_, hnf_c_).
  std::int64_t hnf_a_ = 1;
  std::int64_t hnf_b_ = 0;
  std::int64_t hnf_c_ = 1;
  struct Slot {
    std::uint32_t tile;
    Cell cell;
  };
  std::vector<Slot> slots_;  // indexed by residue_index
};

}  // namespace firecut
