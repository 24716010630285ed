#include "firecut/explorer.hpp"

#include <algorithm>
#include <deque>

#include "firecut/errors.hpp"

namespace firecut {

Ball ball(const GraphOracle& oracle, std::span<const Vertex> sources, std::uint64_t radius,
          std::uint64_t member_cap) {
  Ball out;
  out.centers.assign(sources.begin(), sources.end());
  std::sort(out.centers.begin(), out.centers.end());
  out.centers.erase(std::unique(out.centers.begin(), out.centers.end()), out.centers.end());
  out.radius = radius;

  for (const Vertex& s : out.centers) {
    if (!oracle.contains(s)) throw GraphError("ball source " + to_string(s) + " not in graph");
    out.distance.emplace(s, 0);
    out.members.push_back(s);
  }
  std::vector<Vertex> buf;
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    const Vertex u = out.members[head];
    const std::uint64_t du = out.distance.at(u);
    oracle.neighbors(u, buf);
    if (du == radius) {
      for (const Vertex& w : buf)
        if (!out.distance.contains(w)) out.frontier_edges.emplace_back(u, w);
      continue;
    }
    for (const Vertex& w : buf) {
      if (out.distance.emplace(w, du + 1).second) {
        out.members.push_back(w);
        if (out.members.size() > member_cap)
          throw LimitError("ball exceeds " + std::to_string(member_cap) + " vertices");
      }
    }
  }
  // Every member is known before the outermost layer is scanned, so the
  // collected edges all leave the ball.
  std::sort(out.frontier_edges.begin(), out.frontier_edges.end());
  out.frontier_edges.erase(std::unique(out.frontier_edges.begin(), out.frontier_edges.end()),
                           out.frontier_edges.end());
  return out;
}

ComponentReport component_bounded(const GraphOracle& oracle, const Vertex& seed,
                                  std::uint64_t size_bound) {
  if (!oracle.contains(seed)) throw GraphError("component seed " + to_string(seed) + " not in graph");
  ComponentReport report;
  report.seed = seed;
  VertexSet seen{seed};
  std::vector<Vertex> order{seed};
  std::vector<Vertex> buf;
  for (std::size_t head = 0; head < order.size(); ++head) {
    oracle.neighbors(order[head], buf);
    for (const Vertex& w : buf) {
      if (seen.insert(w).second) {
        order.push_back(w);
        if (order.size() > size_bound) return report;
      }
    }
  }
  report.finite = true;
  std::sort(order.begin(), order.end());
  const GraphSpec& spec = oracle.spec();
  for (const Vertex& m : order) {
    if (spec.is_hub(m)) continue;
    spec.neighbors(m, buf);
    for (const Vertex& w : buf)
      if (!oracle.contains(w)) report.escaping_edges.emplace_back(m, w);
  }
  std::sort(report.escaping_edges.begin(), report.escaping_edges.end());
  report.members = std::move(order);
  return report;
}

std::vector<Vertex> finite_components_near(const GraphOracle& oracle,
                                           std::span<const Vertex> anchors,
                                           std::uint64_t size_bound) {
  std::vector<Vertex> sorted_anchors(anchors.begin(), anchors.end());
  std::sort(sorted_anchors.begin(), sorted_anchors.end());

  VertexSet finite;
  VertexSet infinite;
  std::vector<Vertex> starts;
  std::vector<Vertex> order;
  std::vector<Vertex> buf;
  VertexSet seen;
  for (const Vertex& a : sorted_anchors) {
    oracle.neighbors_of_any(a, starts);
    for (const Vertex& start : starts) {
      if (finite.contains(start) || infinite.contains(start)) continue;
      // Bounded search; meeting a vertex already known to be in an infinite
      // component settles the question immediately.
      seen.clear();
      order.clear();
      seen.insert(start);
      order.push_back(start);
      bool is_infinite = false;
      for (std::size_t head = 0; head < order.size() && !is_infinite; ++head) {
        oracle.neighbors(order[head], buf);
        for (const Vertex& w : buf) {
          if (infinite.contains(w)) {
            is_infinite = true;
            break;
          }
          if (seen.insert(w).second) {
            order.push_back(w);
            if (order.size() > size_bound) {
              is_infinite = true;
              break;
            }
          }
        }
      }
      (is_infinite ? infinite : finite).insert(order.begin(), order.end());
    }
  }
  return sorted(finite);
}

}  // namespace firecut
