#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "firecut/graph_spec.hpp"

namespace firecut {

/// Polynomial growth and expansion bounds of a lattice family.
///
///  - `ball(K)` bounds the number of vertices within distance K of any vertex.
///  - `expansion(B)` bounds the size of any finite connected subgraph with at
///    most B escaping edges.
///
/// Both are non-decreasing. Values saturate at UINT64_MAX.
struct BoundsProfile {
  using Fn = std::function<std::uint64_t(std::uint64_t)>;
  std::string family;
  Fn ball;
  Fn expansion;
};

/// Throws SpecError for families without a growth/expansion profile
/// (hub graphs, subset stars).
BoundsProfile bounds_profile(const GraphSpec& spec);

/// Same profile with `expansion` multiplied by `factor` (still a valid bound).
BoundsProfile scale_expansion(BoundsProfile profile, std::uint64_t factor);

std::uint64_t ball_bound(const BoundsProfile& profile, std::uint64_t radius);
std::uint64_t expansion_bound(const BoundsProfile& profile, std::uint64_t escaping);

/// max(ball, expansion): one function usable as both a distance and a size bound.
std::uint64_t combined_L(const BoundsProfile& profile, std::uint64_t k);

/// combined_L(B + delta * removed_count), the bound after deleting
/// `removed_count` vertices. Throws GraphError when `delta` is unbounded.
std::uint64_t adjusted_L(const BoundsProfile& profile, std::uint64_t budget, MaxDegree delta,
                         std::uint64_t removed_count);

// Closed forms.

/// 1 + 2K(K+1).
std::uint64_t grid_ball(std::uint64_t k);
/// ceil(B(B+2) / 16).
std::uint64_t grid_expansion(std::uint64_t b);
/// ceil((B+1)^2 (S+1)^2 / 4).
std::uint64_t polyomino_expansion(std::uint64_t b, std::uint64_t tile_size);
/// grid_expansion(shared * B). A finite connected set of tiles with B
/// escaping adjacencies, holes filled in, is a polyomino with perimeter at
/// most shared * B when adjacent tiles share at most `shared` unit edges.
std::uint64_t tiling_expansion(std::uint64_t b, std::uint64_t shared);

}  // namespace firecut
