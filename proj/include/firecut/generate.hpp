#pragma once

#include <cstdint>
#include <random>

#include "firecut/cnf.hpp"
#include "firecut/instance.hpp"

namespace firecut {

/// Seeded source of uniform integers. Draws use rejection on raw
/// mt19937_64 output, so a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Ignitions are drawn from the diamond of `ignition_radius` around the
// origin and removed vertices from the diamond of `removed_radius`; both
// must fit in `window`.
struct GridGenParams {
  std::uint32_t ignitions = 1;
  std::uint32_t removed = 0;
  std::uint64_t budget = 4;
  std::int64_t window = 8;
  std::int64_t ignition_radius = 2;
  std::int64_t removed_radius = 3;
};

Instance generate_grid(const GridGenParams& params, std::uint64_t seed);

// Tiling by 1 x tile_size bars; tile_size 2 is the domino tiling.
struct PolyominoGenParams {
  std::uint32_t tile_size = 2;
  std::uint32_t ignitions = 1;
  std::uint32_t removed = 0;
  std::uint64_t budget = 6;
  std::int64_t radius = 3;  // plane cells drawn within this diamond
};

PeriodicTiling bar_tiling(std::uint32_t tile_size);
Instance generate_polyomino(const PolyominoGenParams& params, std::uint64_t seed);

// Random spanning tree on v0..v{n-1} plus about n/3 extra edges.
struct HubGenParams {
  std::uint32_t explicit_size = 8;
  std::uint32_t hubs = 1;
  std::uint32_t ignitions = 1;
  std::uint32_t removed = 0;
  std::uint64_t budget = 2;
};

Instance generate_hub(const HubGenParams& params, std::uint64_t seed);

/// `clauses` clauses of three distinct variables with random signs.
Cnf generate_3cnf(std::uint32_t n_vars, std::uint32_t clauses, std::uint64_t seed);

/// The grid instance on the tiling by unit squares.
Instance as_unit_polyomino(const Instance& grid_instance);

}  // namespace firecut
