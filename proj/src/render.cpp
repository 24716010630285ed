#include "firecut/render.hpp"

#include <algorithm>

#include "firecut/bounds.hpp"
#include "firecut/explorer.hpp"

namespace firecut {

std::optional<std::string> render_grid(const Instance& instance, const Verdict& verdict,
                                       std::size_t max_width) {
  const GraphSpec& spec = *instance.graph;
  if (!spec.is_lattice_family()) return std::nullopt;
  auto all_grid = [](const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const Vertex& v) { return v.is_grid(); });
  };
  if (instance.ignitions.empty() || !all_grid(instance.ignitions) || !all_grid(instance.removed))
    return std::nullopt;

  VertexSet burned;
  const VertexSet removed = instance.removed_set();
  if (verdict.contained && verdict.cut) {
    OraclePtr g = apply_cut(restrict(instance.graph, removed), *verdict.cut);
    const std::uint64_t bound =
        adjusted_L(bounds_profile(spec), instance.budget, spec.max_degree(), instance.removed.size());
    for (const Vertex& v : instance.ignitions) {
      if (removed.contains(v)) continue;
      ComponentReport r = component_bounded(*g, v, bound);
      if (r.finite) burned.insert(r.members.begin(), r.members.end());
    }
  }
  std::int64_t lo_i = INT64_MAX, hi_i = INT64_MIN, lo_j = INT64_MAX, hi_j = INT64_MIN;
  auto grow = [&](const Vertex& v) {
    if (!v.is_grid()) return;
    lo_i = std::min(lo_i, v.as_grid().i);
    hi_i = std::max(hi_i, v.as_grid().i);
    lo_j = std::min(lo_j, v.as_grid().j);
    hi_j = std::max(hi_j, v.as_grid().j);
  };
  for (const Vertex& v : instance.ignitions) grow(v);
  for (const Vertex& v : instance.removed) grow(v);
  for (const Vertex& v : burned) grow(v);
  EdgeSet cut;
  std::size_t diagonal = 0;
  if (verdict.cut)
    for (const Edge& e : verdict.cut->edges) {
      grow(e.first());
      grow(e.second());
      cut.insert(e);
      if (e.first().is_grid() && e.second().is_grid() &&
          e.first().as_grid().i != e.second().as_grid().i &&
          e.first().as_grid().j != e.second().as_grid().j)
        ++diagonal;
    }
  --lo_i, ++hi_i, --lo_j, ++hi_j;
  const auto width = static_cast<std::size_t>(2 * (hi_i - lo_i) + 1);
  if (width > max_width) return std::nullopt;

  auto cell = [&](std::int64_t i, std::int64_t j) {
    const Vertex v = Vertex::grid(i, j);
    if (removed.contains(v)) return 'X';
    if (std::binary_search(instance.ignitions.begin(), instance.ignitions.end(), v)) return 'F';
    if (burned.contains(v)) return '#';
    return '.';
  };
  auto is_cut = [&](std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) {
    return cut.contains(Edge(Vertex::grid(i, j), Vertex::grid(k, l)));
  };
  std::string out;
  for (std::int64_t j = hi_j; j >= lo_j; --j) {
    for (std::int64_t i = lo_i; i <= hi_i; ++i) {
      out += cell(i, j);
      if (i < hi_i) out += is_cut(i, j, i + 1, j) ? '|' : ' ';
    }
    out += '\n';
    if (j == lo_j) break;
    for (std::int64_t i = lo_i; i <= hi_i; ++i) {
      out += is_cut(i, j, i, j - 1) ? '-' : ' ';
      if (i < hi_i) out += ' ';
    }
    out += '\n';
  }
  out += "i from " + std::to_string(lo_i) + " to " + std::to_string(hi_i) + ", j from " +
         std::to_string(hi_j) + " down to " + std::to_string(lo_j) + "\n";
  if (diagonal > 0) out += std::to_string(diagonal) + " diagonal cut edge(s) not drawn\n";
  return out;
}

}  // namespace firecut
