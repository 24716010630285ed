#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "firecut/cnf.hpp"
#include "firecut/instance.hpp"
#include "firecut/verdict.hpp"

namespace firecut::oracle {

inline constexpr std::uint64_t kSearchCap = 10'000'000;
inline constexpr std::uint32_t kMaxPolyominoCells = 12;
inline constexpr std::uint32_t kMaxSatVars = 20;

/// Exhaustive search for a cut within the ball of `window_radius` around
/// the ignitions (both ends of every cut edge inside it). Branches on the
/// burned region: each frontier vertex either burns or is fenced off.
/// Returns the cheapest cut found; contained iff it costs at most the
/// budget. Throws LimitError past kSearchCap search nodes.
Verdict brute_force_solve(const Instance& instance, std::uint64_t window_radius);

/// A window radius at which brute_force_solve is complete: every burned
/// region of a cut within budget fits in it, by the polyomino perimeter
/// bound on the square grid.
std::uint64_t complete_window(const Instance& instance);

/// Largest burned region a cut within budget can leave on the square grid.
std::uint64_t max_burned_cells(std::uint64_t budget, std::uint64_t removed_edges);

struct Polyomino {
  std::vector<std::pair<int, int>> cells;  // sorted; first cell is (0,0)
  bool operator==(const Polyomino&) const = default;
  auto operator<=>(const Polyomino&) const = default;
};

/// Every fixed polyomino with p cells, once each, in sorted order.
std::vector<Polyomino> enumerate_polyominoes(std::uint32_t p);

/// Unit edges between a cell of the polyomino and a cell outside it.
std::uint32_t perimeter(const Polyomino& poly);

/// Exhaustive satisfiability check, at most kMaxSatVars variables.
std::optional<std::uint64_t> find_satisfying(const Cnf& cnf);
bool brute_force_sat(const Cnf& cnf);

/// Tries every set of at most `budget` explicit edges, by size and then
/// lexicographically. Throws LimitError past kSearchCap candidates.
Verdict brute_force_rayfree(const Instance& instance);

}  // namespace firecut::oracle
