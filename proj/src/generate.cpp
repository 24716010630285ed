#include "firecut/generate.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "firecut/errors.hpp"

namespace firecut {
namespace {

std::vector<Cell> diamond(std::int64_t r) {
  std::vector<Cell> out;
  for (std::int64_t i = -r; i <= r; ++i)
    for (std::int64_t j = -r; j <= r; ++j)
      if (std::abs(i) + std::abs(j) <= r) out.push_back({i, j});
  return out;
}

// k distinct picks from pool, skipping `taken`.
template <typename T>
std::vector<T> pick(Rng& rng, std::vector<T> pool, std::uint32_t k, const std::vector<T>& taken,
                    const char* what) {
  std::erase_if(pool, [&](const T& x) { return std::find(taken.begin(), taken.end(), x) != taken.end(); });
  if (k > pool.size())
    throw SpecError(std::string("gen: not enough room for ") + std::to_string(k) + " " + what);
  std::vector<T> out;
  for (std::uint32_t n = 0; n < k; ++n) {
    const auto at = rng.below(pool.size() - n) + n;
    std::swap(pool[n], pool[at]);
    out.push_back(pool[n]);
  }
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance generate_grid(const GridGenParams& p, std::uint64_t seed) {
  if (p.ignition_radius < 0 || p.removed_radius < 0 || p.ignition_radius > p.window ||
      p.removed_radius > p.window)
    throw SpecError("gen grid: radii must lie in [0, window]");
  Rng rng(seed);
  Instance inst;
  inst.graph = std::make_shared<const GraphSpec>(GraphSpec::infinite_grid());
  const auto fire = pick(rng, diamond(p.ignition_radius), p.ignitions, {}, "ignitions");
  const auto gone = pick(rng, diamond(p.removed_radius), p.removed, fire, "removed vertices");
  for (Cell c : fire) inst.ignitions.push_back(Vertex::grid(c.i, c.j));
  for (Cell c : gone) inst.removed.push_back(Vertex::grid(c.i, c.j));
  inst.budget = p.budget;
  inst.normalize();
  inst.validate();
  return inst;
}

PeriodicTiling bar_tiling(std::uint32_t tile_size) {
  if (tile_size == 0) throw SpecError("gen polyomino: tile size must be positive");
  std::vector<Cell> bar;
  for (std::uint32_t k = 0; k < tile_size; ++k) bar.push_back({static_cast<std::int64_t>(k), 0});
  return PeriodicTiling::create({static_cast<std::int64_t>(tile_size), 0}, {0, 1}, {bar}, tile_size);
}

Instance generate_polyomino(const PolyominoGenParams& p, std::uint64_t seed) {
  if (p.radius < 0) throw SpecError("gen polyomino: negative radius");
  Rng rng(seed);
  PeriodicTiling tiling = bar_tiling(p.tile_size);
  std::vector<Vertex> pool;
  for (Cell c : diamond(p.radius)) {
    Vertex v = tiling.owner(c);
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  }
  Instance inst;
  inst.graph = std::make_shared<const GraphSpec>(GraphSpec::polyomino_grid(std::move(tiling)));
  inst.ignitions = pick(rng, pool, p.ignitions, {}, "ignitions");
  inst.removed = pick(rng, pool, p.removed, inst.ignitions, "removed vertices");
  inst.budget = p.budget;
  inst.normalize();
  inst.validate();
  return inst;
}

Instance generate_hub(const HubGenParams& p, std::uint64_t seed) {
  const std::uint32_t n = p.explicit_size;
  if (n == 0) throw SpecError("gen hub: explicit size must be positive");
  if (p.hubs + p.ignitions > n) throw SpecError("gen hub: hubs and ignitions exceed the explicit size");
  Rng rng(seed);
  std::vector<Vertex> vs;
  for (std::uint32_t k = 0; k < n; ++k) vs.push_back(Vertex::named("v" + std::to_string(k)));
  std::vector<Edge> edges;
  for (std::uint32_t k = 1; k < n; ++k) edges.emplace_back(vs[k], vs[rng.below(k)]);
  for (std::uint32_t extra = 0; extra < n / 3; ++extra) {
    const auto a = rng.below(n);
    const auto b = rng.below(n);
    if (a == b) continue;
    Edge e(vs[a], vs[b]);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  const auto hubs = pick(rng, vs, p.hubs, {}, "hubs");
  const auto fire = pick(rng, vs, p.ignitions, hubs, "ignitions");
  std::vector<Vertex> taken = fire;
  const auto gone = pick(rng, vs, p.removed, taken, "removed vertices");
  Instance inst;
  inst.graph = std::make_shared<const GraphSpec>(GraphSpec::hub_graph(vs, edges, hubs));
  inst.ignitions = fire;
  inst.removed = gone;
  inst.budget = p.budget;
  inst.normalize();
  inst.validate();
  return inst;
}

Cnf generate_3cnf(std::uint32_t n_vars, std::uint32_t clauses, std::uint64_t seed) {
  if (n_vars < 3) throw SpecError("gen cnf: need at least 3 variables");
  Rng rng(seed);
  Cnf f;
  f.n_vars = n_vars;
  std::vector<std::int32_t> vars(n_vars);
  for (std::uint32_t k = 0; k < n_vars; ++k) vars[k] = static_cast<std::int32_t>(k + 1);
  for (std::uint32_t c = 0; c < clauses; ++c) {
    std::vector<std::int32_t> clause;
    for (std::int32_t v : pick(rng, vars, 3, {}, "variables")) clause.push_back(rng.coin() ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

Instance as_unit_polyomino(const Instance& g) {
  if (!std::holds_alternative<InfiniteGrid>(g.graph->family()))
    throw SpecError("as_unit_polyomino: expected a grid instance");
  auto to_poly = [](const Vertex& v) { return Vertex::poly(v.as_grid().i, v.as_grid().j, 0); };
  Instance out;
  out.graph = std::make_shared<const GraphSpec>(GraphSpec::polyomino_grid(bar_tiling(1)));
  for (const Vertex& v : g.ignitions) out.ignitions.push_back(to_poly(v));
  for (const Vertex& v : g.removed) out.removed.push_back(to_poly(v));
  out.budget = g.budget;
  out.normalize();
  return out;
}

}  // namespace firecut
