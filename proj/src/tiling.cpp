#include "firecut/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "firecut/errors.hpp"

namespace firecut {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

constexpr Cell kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

bool edge_connected(const std::vector<Cell>& cells) {
  std::set<Cell> all(cells.begin(), cells.end());
  std::set<Cell> seen{cells.front()};
  std::queue<Cell> queue;
  queue.push(cells.front());
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop();
    for (Cell d : kSteps) {
      Cell n = c + d;
      if (all.count(n) && seen.insert(n).second) queue.push(n);
    }
  }
  return seen.size() == all.size();
}

}  // namespace

PeriodicTiling PeriodicTiling::create(Cell period_a, Cell period_b,
                                      std::vector<std::vector<Cell>> tiles,
                                      std::uint32_t max_tile_size) {
  if (max_tile_size == 0) throw SpecError("tiling: max tile size must be positive");
  const std::int64_t det = period_a.i * period_b.j - period_a.j * period_b.i;
  if (det == 0) throw SpecError("tiling: period vectors are linearly dependent");
  if (tiles.empty()) throw SpecError("tiling: no tiles");

  PeriodicTiling t;
  t.period_a_ = period_a;
  t.period_b_ = period_b;
  t.max_tile_size_ = max_tile_size;

  // Row-reduce on the j components to reach (a, 0), (b, c).
  Cell u = period_a;
  Cell v = period_b;
  while (v.j != 0) {
    std::int64_t q = u.j / v.j;
    u = {u.i - q * v.i, u.j - q * v.j};
    std::swap(u, v);
  }
  // Now v.j == 0 and |u.j| = gcd of the j components.
  if (u.j < 0) u = {-u.i, -u.j};
  if (v.i < 0) v = {-v.i, -v.j};
  t.hnf_a_ = v.i;
  t.hnf_c_ = u.j;
  t.hnf_b_ = floor_mod(u.i, t.hnf_a_);
  if (t.hnf_a_ * t.hnf_c_ != std::llabs(det)) throw SpecError("tiling: lattice reduction failed");

  std::size_t total = 0;
  for (auto& tile : tiles) {
    if (tile.empty()) throw SpecError("tiling: empty tile");
    std::sort(tile.begin(), tile.end());
    if (std::adjacent_find(tile.begin(), tile.end()) != tile.end())
      throw SpecError("tiling: duplicate cell inside a tile");
    if (tile.size() > max_tile_size)
      throw SpecError("tiling: tile with " + std::to_string(tile.size()) +
                      " cells exceeds max tile size " + std::to_string(max_tile_size));
    if (!edge_connected(tile)) throw SpecError("tiling: tile is not edge-connected");
    total += tile.size();
  }
  if (total != static_cast<std::size_t>(std::llabs(det)))
    throw SpecError("tiling: tiles cover " + std::to_string(total) +
                    " cells but the fundamental domain has " + std::to_string(std::llabs(det)));

  t.slots_.assign(total, Slot{UINT32_MAX, {}});
  for (std::uint32_t k = 0; k < tiles.size(); ++k) {
    t.anchors_.push_back(tiles[k].front());
    for (Cell c : tiles[k]) {
      Slot& slot = t.slots_[t.residue_index(c)];
      if (slot.tile != UINT32_MAX) throw SpecError("tiling: tiles overlap modulo the periods");
      slot = {k, c};
    }
  }
  t.tiles_ = std::move(tiles);
  for (std::uint32_t k = 0; k < t.tiles_.size(); ++k) {
    const PolyV v{t.anchors_[k].i, t.anchors_[k].j, k};
    std::map<PolyV, std::uint32_t> shared;
    for (Cell c : t.tiles_[k])
      for (Cell d : kSteps) {
        PolyV w = t.owner(c + d);
        if (w != v) t.max_shared_ = std::max(t.max_shared_, ++shared[w]);
      }
  }
  return t;
}

Cell PeriodicTiling::reduce(Cell c) const {
  std::int64_t k = floor_div(c.j, hnf_c_);
  Cell r{c.i - k * hnf_b_, c.j - k * hnf_c_};
  r.i = floor_mod(r.i, hnf_a_);
  return r;
}

std::size_t PeriodicTiling::residue_index(Cell c) const {
  Cell r = reduce(c);
  return static_cast<std::size_t>(r.i + hnf_a_ * r.j);
}

PolyV PeriodicTiling::owner(Cell c) const {
  const Slot& slot = slots_[residue_index(c)];
  Cell anchor = anchors_[slot.tile] + (c - slot.cell);
  return PolyV{anchor.i, anchor.j, slot.tile};
}

bool PeriodicTiling::contains(const PolyV& v) const {
  if (v.tile >= tiles_.size()) return false;
  Cell r = reduce(Cell{v.cell_i, v.cell_j} - anchors_[v.tile]);
  return r.i == 0 && r.j == 0;
}

std::vector<Cell> PeriodicTiling::cells(const PolyV& v) const {
  Cell shift = Cell{v.cell_i, v.cell_j} - anchors_.at(v.tile);
  std::vector<Cell> out;
  out.reserve(tiles_[v.tile].size());
  for (Cell c : tiles_[v.tile]) out.push_back(c + shift);
  return out;
}

void PeriodicTiling::neighbors(const PolyV& v, std::vector<Vertex>& out) const {
  out.clear();
  Cell shift = Cell{v.cell_i, v.cell_j} - anchors_[v.tile];
  for (Cell c : tiles_[v.tile]) {
    for (Cell d : kSteps) {
      PolyV w = owner(c + shift + d);
      if (w != v) out.emplace_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace firecut
