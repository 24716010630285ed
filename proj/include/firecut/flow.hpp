#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace firecut {

struct Arc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  std::int64_t capacity = 0;
};

/// Finite directed network with integer capacities.
///
/// Arcs are stored in pairs: arc i and arc i^1 are opposite to each other.
/// A directed arc gets a zero-capacity partner; an undirected edge is a pair
/// of opposite arcs with equal capacity.
class FlowNetwork {
 public:
  /// Throws Error when source == sink or either is out of range.
  FlowNetwork(std::uint32_t node_count, std::uint32_t source, std::uint32_t sink);

  std::uint32_t add_node();
  /// Returns the index of the forward arc.
  std::size_t add_arc(std::uint32_t tail, std::uint32_t head, std::int64_t capacity);
  std::size_t add_edge(std::uint32_t a, std::uint32_t b, std::int64_t capacity);

  std::uint32_t node_count() const { return node_count_; }
  std::uint32_t source() const { return source_; }
  std::uint32_t sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  void reserve_arcs(std::size_t n) { arcs_.reserve(n); }

  /// DIMACS max-flow text ("p max", "n ... s|t", "a tail head cap"),
  /// 1-based node ids; zero-capacity partners are omitted.
  std::string to_dimacs() const;

 private:
  void check_node(std::uint32_t v) const;

  std::uint32_t node_count_;
  std::uint32_t source_;
  std::uint32_t sink_;
  std::vector<Arc> arcs_;
};

/// Stand-in for an infinite capacity: larger than any cut made only of
/// finite arcs whose capacities sum to `finite_total`.
std::int64_t sentinel_capacity(std::int64_t finite_total);

struct CutResult {
  /// Maximum flow value, or (when `exceeded`) the flow reached when the
  /// early-stop threshold was passed.
  std::int64_t value = 0;
  bool exceeded = false;
  std::vector<std::uint32_t> source_side;  // sorted; empty when exceeded
  std::vector<std::size_t> cut_arcs;       // arcs leaving source_side with capacity > 0
  std::vector<std::int64_t> flow;          // per arc; flow[i] == -flow[i^1]
};

/// Shortest-augmenting-path maximum flow. With `early_stop = beta`, returns
/// as soon as the flow exceeds beta, flagged `exceeded`. Otherwise the
/// source side is the set of nodes reachable from the source in the final
/// residual network (the minimum cut closest to the source).
/// Throws LimitError when the capacities could overflow 64-bit arithmetic.
CutResult max_flow(const FlowNetwork& net, std::optional<std::int64_t> early_stop = std::nullopt);

/// True iff `result` carries a feasible flow (capacity and conservation
/// constraints), its value equals the net outflow of the source, and the
/// reported cut separates source from sink with capacity equal to that value.
bool assert_duality(const FlowNetwork& net, const CutResult& result);

}  // namespace firecut
