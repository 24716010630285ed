#pragma once

#include <memory>
#include <vector>

#include "firecut/instance.hpp"

namespace fc_test {

using firecut::Vertex;

inline Vertex g(std::int64_t i, std::int64_t j) { return Vertex::grid(i, j); }
inline Vertex n(const char* id) { return Vertex::named(id); }

inline firecut::Instance grid_instance(std::vector<Vertex> ignitions, std::vector<Vertex> removed,
                                       std::uint64_t budget) {
  firecut::Instance inst;
  inst.graph = std::make_shared<const firecut::GraphSpec>(firecut::GraphSpec::infinite_grid());
  inst.ignitions = std::move(ignitions);
  inst.removed = std::move(removed);
  inst.budget = budget;
  inst.normalize();
  return inst;
}

inline firecut::Instance hub_instance(std::vector<Vertex> vs, std::vector<firecut::Edge> es,
                                      std::vector<Vertex> hubs, std::vector<Vertex> ignitions,
                                      std::uint64_t budget) {
  firecut::Instance inst;
  inst.graph = std::make_shared<const firecut::GraphSpec>(
      firecut::GraphSpec::hub_graph(std::move(vs), std::move(es), std::move(hubs)));
  inst.ignitions = std::move(ignitions);
  inst.budget = budget;
  inst.normalize();
  return inst;
}

// Cells within Manhattan distance r of the origin, counted by brute force.
inline std::uint64_t count_diamond(std::int64_t r) {
  std::uint64_t c = 0;
  for (std::int64_t i = -r; i <= r; ++i)
    for (std::int64_t j = -r; j <= r; ++j)
      if ((i < 0 ? -i : i) + (j < 0 ? -j : j) <= r) ++c;
  return c;
}

}  // namespace fc_test

#include "firecut/flow.hpp"

namespace fc_test {

// Cheapest arc set whose removal leaves no s-t path, by trying every subset
// of the positive-capacity arcs.
inline std::int64_t brute_min_cut(const firecut::FlowNetwork& net) {
  const auto& arcs = net.arcs();
  std::vector<std::size_t> real;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].capacity > 0) real.push_back(i);
  const std::uint32_t n = net.node_count();
  std::int64_t best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << real.size()); ++mask) {
    std::int64_t cost = 0;
    std::vector<bool> cut(arcs.size(), false);
    for (std::size_t k = 0; k < real.size(); ++k)
      if ((mask >> k) & 1U) {
        cut[real[k]] = true;
        cost += arcs[real[k]].capacity;
      }
    if (best >= 0 && cost >= best) continue;
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{net.source()};
    seen[net.source()] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t i : real)
        if (!cut[i] && arcs[i].tail == u && !seen[arcs[i].head]) {
          seen[arcs[i].head] = true;
          stack.push_back(arcs[i].head);
        }
    }
    if (!seen[net.sink()]) best = cost;
  }
  return best;
}

}  // namespace fc_test
