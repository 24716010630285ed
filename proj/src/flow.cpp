#include "firecut/flow.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "firecut/errors.hpp"

namespace firecut {

FlowNetwork::FlowNetwork(std::uint32_t node_count, std::uint32_t source, std::uint32_t sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (source == sink) throw Error("flow network: source equals sink");
  check_node(source);
  check_node(sink);
}

void FlowNetwork::check_node(std::uint32_t v) const {
  if (v >= node_count_) throw Error("flow network: node " + std::to_string(v) + " out of range");
}

std::uint32_t FlowNetwork::add_node() { return node_count_++; }

std::size_t FlowNetwork::add_arc(std::uint32_t tail, std::uint32_t head, std::int64_t capacity) {
  check_node(tail);
  check_node(head);
  if (capacity < 0) throw Error("flow network: negative capacity");
  arcs_.push_back({tail, head, capacity});
  arcs_.push_back({head, tail, 0});
  return arcs_.size() - 2;
}

std::size_t FlowNetwork::add_edge(std::uint32_t a, std::uint32_t b, std::int64_t capacity) {
  check_node(a);
  check_node(b);
  if (capacity < 0) throw Error("flow network: negative capacity");
  arcs_.push_back({a, b, capacity});
  arcs_.push_back({b, a, capacity});
  return arcs_.size() - 2;
}

std::string FlowNetwork::to_dimacs() const {
  std::size_t m = std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.capacity > 0; });
  std::ostringstream out;
  out << "p max " << node_count_ << ' ' << m << '\n';
  out << "n " << source_ + 1 << " s\n";
  out << "n " << sink_ + 1 << " t\n";
  for (const Arc& a : arcs_)
    if (a.capacity > 0) out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.capacity << '\n';
  return out.str();
}

std::int64_t sentinel_capacity(std::int64_t finite_total) {
  if (finite_total < 0 || finite_total == std::numeric_limits<std::int64_t>::max())
    throw LimitError("capacity total too large for a sentinel");
  return finite_total + 1;
}

CutResult max_flow(const FlowNetwork& net, std::optional<std::int64_t> early_stop) {
  const auto& arcs = net.arcs();
  const std::uint32_t n = net.node_count();
  const std::uint32_t s = net.source();
  const std::uint32_t t = net.sink();

  std::int64_t total = 0;
  for (const Arc& a : arcs) {
    if (a.capacity > std::numeric_limits<std::int64_t>::max() / 2 - total)
      throw LimitError("flow network: capacity sum overflows 64-bit integers");
    total += a.capacity;
  }

  // Compressed adjacency by tail.
  std::vector<std::uint32_t> start(n + 1, 0);
  for (const Arc& a : arcs) ++start[a.tail + 1];
  for (std::uint32_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::uint32_t> adj(arcs.size());
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) adj[fill[arcs[i].tail]++] = static_cast<std::uint32_t>(i);
  }

  CutResult result;
  result.flow.assign(arcs.size(), 0);
  auto residual = [&](std::size_t i) { return arcs[i].capacity - result.flow[i]; };

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);

  auto bfs = [&]() {
    std::fill(parent.begin(), parent.end(), kNone);
    queue.clear();
    queue.push_back(s);
    parent[s] = kNone - 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::uint32_t u = queue[h];
      for (std::uint32_t k = start[u]; k < start[u + 1]; ++k) {
        std::uint32_t i = adj[k];
        std::uint32_t v = arcs[i].head;
        if (parent[v] == kNone && residual(i) > 0) {
          parent[v] = i;
          if (v == t) return true;
          queue.push_back(v);
        }
      }
    }
    return false;
  };

  while (bfs()) {
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t v = t; v != s; v = arcs[parent[v]].tail) push = std::min(push, residual(parent[v]));
    for (std::uint32_t v = t; v != s; v = arcs[parent[v]].tail) {
      result.flow[parent[v]] += push;
      result.flow[parent[v] ^ 1U] -= push;
    }
    result.value += push;
    if (early_stop && result.value > *early_stop) {
      result.exceeded = true;
      return result;
    }
  }

  // The last search failed, so `parent` marks exactly the residual-reachable set.
  std::vector<char> in_source(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    if (parent[v] != kNone) {
      in_source[v] = 1;
      result.source_side.push_back(v);
    }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (in_source[arcs[i].tail] && !in_source[arcs[i].head] && arcs[i].capacity > 0)
      result.cut_arcs.push_back(i);
  return result;
}

bool assert_duality(const FlowNetwork& net, const CutResult& result) {
  const auto& arcs = net.arcs();
  const std::uint32_t n = net.node_count();
  if (result.exceeded || result.flow.size() != arcs.size()) return false;

  std::vector<std::int64_t> excess(n, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (result.flow[i] != -result.flow[i ^ 1U]) return false;
    if (result.flow[i] > arcs[i].capacity) return false;
    excess[arcs[i].tail] -= result.flow[i];
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (v != net.source() && v != net.sink() && excess[v] != 0) return false;
  if (-excess[net.source()] != result.value) return false;

  std::vector<char> in_source(n, 0);
  for (std::uint32_t v : result.source_side) {
    if (v >= n) return false;
    in_source[v] = 1;
  }
  if (!in_source[net.source()] || in_source[net.sink()]) return false;

  std::vector<std::size_t> expected;
  std::int64_t capacity = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (in_source[arcs[i].tail] && !in_source[arcs[i].head] && arcs[i].capacity > 0) {
      expected.push_back(i);
      capacity += arcs[i].capacity;
    }
  std::vector<std::size_t> reported = result.cut_arcs;
  std::sort(reported.begin(), reported.end());
  return reported == expected && capacity == result.value;
}

}  // namespace firecut
