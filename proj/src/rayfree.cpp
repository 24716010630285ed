#include "firecut/rayfree.hpp"

#include <algorithm>

#include "firecut/errors.hpp"

namespace firecut {
namespace {

const HubGraph& hub_family(const Instance& instance) {
  const auto* h = std::get_if<HubGraph>(&instance.graph->family());
  if (h == nullptr) throw SpecError("expected a hub_graph instance, got " + instance.graph->family_name());
  return *h;
}

constexpr const char* kHubIgnition = "infinite-degree ignition";

}  // namespace

HatSets build_hat_sets(const GraphOracle& oracle, std::span<const Vertex> ignitions,
                       std::uint64_t explicit_limit) {
  VertexSet seen;
  VertexSet hubs;
  std::vector<Vertex> order;
  for (const Vertex& v : ignitions) {
    if (oracle.is_hub(v)) throw GraphError(std::string(kHubIgnition) + " at " + to_string(v));
    if (seen.insert(v).second) order.push_back(v);
  }
  auto check = [&] {
    if (order.size() + hubs.size() > explicit_limit)
      throw LimitError("search left the finite explicit part (" + std::to_string(explicit_limit) +
                       " vertices)");
  };
  check();
  EdgeSet edges;
  std::vector<Vertex> buf;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    oracle.neighbors(u, buf);
    for (const Vertex& w : buf) {
      edges.insert(Edge(u, w));
      if (oracle.is_hub(w)) {
        if (hubs.insert(w).second) check();
      } else if (seen.insert(w).second) {
        order.push_back(w);
        check();
      }
    }
  }
  HatSets out;
  out.v_hat = sorted(seen);
  out.v_hat_inf = sorted(hubs);
  out.induced_edges = sorted(edges);
  return out;
}

HatSets build_hat_sets(const Instance& instance) {
  const HubGraph& h = hub_family(instance);
  OraclePtr g = restrict(instance.graph, instance.removed_set());
  return build_hat_sets(*g, instance.ignitions, h.vertices.size());
}

RayfreeNetwork build_network_rayfree(const HatSets& hats, const Instance& instance) {
  RayfreeNetwork out;
  out.node_to_vertex.resize(2);
  for (const auto* part : {&hats.v_hat, &hats.v_hat_inf})
    for (const Vertex& v : *part) {
      out.vertex_to_node.emplace(v, static_cast<std::uint32_t>(out.node_to_vertex.size()));
      out.node_to_vertex.push_back(v);
    }
  out.network = FlowNetwork(static_cast<std::uint32_t>(out.node_to_vertex.size()), 0, 1);
  const std::int64_t inf = sentinel_capacity(static_cast<std::int64_t>(hats.induced_edges.size()));
  for (const Vertex& v : instance.ignitions) out.network.add_arc(0, out.vertex_to_node.at(v), inf);
  for (const Vertex& h : hats.v_hat_inf) out.network.add_arc(out.vertex_to_node.at(h), 1, inf);
  for (const Edge& e : hats.induced_edges)
    out.network.add_edge(out.vertex_to_node.at(e.first()), out.vertex_to_node.at(e.second()), 1);
  return out;
}

Verdict solve_rayfree(const Instance& instance, const SolverOptions& options) {
  hub_family(instance);
  Verdict verdict;
  for (const Vertex& v : instance.ignitions)
    if (instance.graph->is_hub(v)) {
      verdict.reason = kHubIgnition;
      return verdict;
    }
  if (instance.ignitions.empty()) {
    verdict.contained = true;
    verdict.cut = CutSystem{};
    verdict.min_cut_value = 0;
    return verdict;
  }

  const HatSets hats = build_hat_sets(instance);
  const RayfreeNetwork net = build_network_rayfree(hats, instance);
  if (net.node_to_vertex.size() > options.node_cap)
    throw LimitError("ray-free network exceeds the node cap");
  const auto budget = static_cast<std::int64_t>(std::min<std::uint64_t>(instance.budget, INT64_MAX - 1));
  CutResult flow = max_flow(net.network, options.exact_min_cut ? std::nullopt
                                                                : std::optional<std::int64_t>(budget));
  if (!flow.exceeded) verdict.min_cut_value = flow.value;
  verdict.contained = !flow.exceeded && flow.value <= budget;
  if (verdict.contained) {
    std::vector<Edge> edges;
    for (std::size_t i : flow.cut_arcs) {
      const Arc& a = net.network.arcs()[i];
      if (a.tail < 2 || a.head < 2) throw Error("solve_rayfree: terminal arc in a finite cut");
      edges.emplace_back(net.node_to_vertex[a.tail], net.node_to_vertex[a.head]);
    }
    verdict.cut = CutSystem::from(std::move(edges));
  }
  return verdict;
}

bool verify_cut_rayfree(const Instance& instance, const CutSystem& cut) {
  const HubGraph& h = hub_family(instance);
  OraclePtr g = apply_cut(restrict(instance.graph, instance.removed_set()), cut);
  if (cut.size() > instance.budget) return false;
  for (const Vertex& v : instance.ignitions)
    if (g->is_hub(v)) return false;
  // Contained iff no ignition reaches a hub.
  return build_hat_sets(*g, instance.ignitions, h.vertices.size()).v_hat_inf.empty();
}

}  // namespace firecut
