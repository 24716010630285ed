#include "firecut/bounds.hpp"

#include <algorithm>
#include <variant>

#include "firecut/errors.hpp"

namespace firecut {
namespace {

using u128 = unsigned __int128;

std::uint64_t saturate(u128 v) { return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v); }

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) { return saturate(u128{a} * b); }

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) { return saturate(u128{a} + b); }

}  // namespace

std::uint64_t grid_ball(std::uint64_t k) {
  // 1 + 2k(k+1) overflows 128 bits only for k beyond 2^63; clamp first.
  if (k > (std::uint64_t{1} << 32)) return UINT64_MAX;
  return saturate(1 + 2 * u128{k} * (u128{k} + 1));
}

std::uint64_t grid_expansion(std::uint64_t b) {
  u128 num = u128{b} * (u128{b} + 2);
  return saturate((num + 15) / 16);
}

std::uint64_t polyomino_expansion(std::uint64_t b, std::uint64_t tile_size) {
  if (b > (std::uint64_t{1} << 31) || tile_size > (std::uint64_t{1} << 31)) return UINT64_MAX;
  u128 x = (u128{b} + 1) * (u128{tile_size} + 1);
  return saturate((x * x + 3) / 4);
}

std::uint64_t tiling_expansion(std::uint64_t b, std::uint64_t shared) {
  const std::uint64_t e = mul_sat(b, shared);
  return e > (std::uint64_t{1} << 62) ? UINT64_MAX : grid_expansion(e);
}

BoundsProfile bounds_profile(const GraphSpec& spec) {
  const auto& fam = spec.family();
  if (std::holds_alternative<InfiniteGrid>(fam))
    return {"grid", [](std::uint64_t k) { return grid_ball(k); },
            [](std::uint64_t b) { return grid_expansion(b); }};
  if (const auto* d = std::get_if<DiagonalGrid>(&fam)) {
    // A diagonal joins cells at grid distance 2.
    const std::uint64_t span = (d->main || d->anti) ? 2 : 1;
    return {"diagonal_grid", [span](std::uint64_t k) { return grid_ball(mul_sat(span, k)); },
            [](std::uint64_t b) { return grid_expansion(b); }};
  }
  if (const auto* p = std::get_if<PolyominoGrid>(&fam)) {
    const std::uint64_t s = p->tiling.max_tile_size();
    return {"polyomino_grid", [s](std::uint64_t k) { return grid_ball(mul_sat(s, k)); },
            [s](std::uint64_t b) { return polyomino_expansion(b, s); }};
  }
  if (const auto* x = std::get_if<ExtraEdges>(&fam)) {
    BoundsProfile base = bounds_profile(*x->base);
    const std::uint64_t span = x->max_span;
    auto base_ball = base.ball;
    return {"extra_edges",
            [base_ball, span](std::uint64_t k) { return base_ball(mul_sat(span, k)); },
            base.expansion};
  }
  throw SpecError("no growth/expansion bounds for family " + spec.family_name());
}

BoundsProfile scale_expansion(BoundsProfile profile, std::uint64_t factor) {
  auto inner = profile.expansion;
  profile.expansion = [inner, factor](std::uint64_t b) { return mul_sat(inner(b), factor); };
  return profile;
}

std::uint64_t ball_bound(const BoundsProfile& profile, std::uint64_t radius) {
  return profile.ball(radius);
}

std::uint64_t expansion_bound(const BoundsProfile& profile, std::uint64_t escaping) {
  return profile.expansion(escaping);
}

std::uint64_t combined_L(const BoundsProfile& profile, std::uint64_t k) {
  return std::max(profile.ball(k), profile.expansion(k));
}

std::uint64_t adjusted_L(const BoundsProfile& profile, std::uint64_t budget, MaxDegree delta,
                         std::uint64_t removed_count) {
  if (!delta.is_finite()) throw GraphError("adjusted bound needs a finite maximum degree");
  return combined_L(profile, add_sat(budget, mul_sat(delta.value(), removed_count)));
}

}  // namespace firecut
