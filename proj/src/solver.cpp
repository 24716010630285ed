#include "firecut/solver.hpp"

#include <algorithm>
#include <optional>
#include <span>

#include "firecut/errors.hpp"
#include "firecut/explorer.hpp"
#include "firecut/gadgets.hpp"
#include "firecut/rayfree.hpp"

namespace firecut {
namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Dense ids for the vertices met while building one network. Lattice
// vertices with small coordinates are keyed by a packed integer.
class Indexer {
 public:
  std::uint32_t size() const { return static_cast<std::uint32_t>(verts_.size()); }
  const Vertex& at(std::uint32_t id) const { return verts_[id]; }

  std::pair<std::uint32_t, bool> intern(const Vertex& v) {
    const std::uint32_t next = size();
    std::pair<std::uint32_t, bool> r;
    if (auto key = pack(v)) {
      auto [it, fresh] = packed_.try_emplace(*key, next);
      r = {it->second, fresh};
    } else {
      auto [it, fresh] = other_.try_emplace(v, next);
      r = {it->second, fresh};
    }
    if (r.second) verts_.push_back(v);
    return r;
  }

  std::uint32_t find(const Vertex& v) const {
    if (auto key = pack(v)) {
      auto it = packed_.find(*key);
      return it == packed_.end() ? kNone : it->second;
    }
    auto it = other_.find(v);
    return it == other_.end() ? kNone : it->second;
  }

 private:
  static bool fits(std::int64_t x, int bits) {
    return x >= -(std::int64_t{1} << (bits - 1)) && x < (std::int64_t{1} << (bits - 1));
  }
  static std::optional<std::uint64_t> pack(const Vertex& v) {
    if (v.is_grid()) {
      const GridV& g = v.as_grid();
      if (!fits(g.i, 31) || !fits(g.j, 31)) return std::nullopt;
      return (static_cast<std::uint64_t>(g.i) & 0x7FFFFFFFULL) << 31 |
             (static_cast<std::uint64_t>(g.j) & 0x7FFFFFFFULL);
    }
    if (v.is_poly()) {
      const PolyV& p = v.as_poly();
      if (!fits(p.cell_i, 27) || !fits(p.cell_j, 27) || p.tile >= 256) return std::nullopt;
      return std::uint64_t{1} << 62 | (static_cast<std::uint64_t>(p.cell_i) & 0x7FFFFFFULL) << 35 |
             (static_cast<std::uint64_t>(p.cell_j) & 0x7FFFFFFULL) << 8 | p.tile;
    }
    return std::nullopt;
  }

  absl::flat_hash_map<std::uint64_t, std::uint32_t> packed_;
  VertexMap<std::uint32_t> other_;
  std::vector<Vertex> verts_;
};

// Per-id state; neighbor lists are cached the first time a vertex is expanded.
struct Workspace {
  const GraphSpec& spec;
  Indexer index;
  std::vector<std::uint32_t> dist;  // kNone outside the ball
  std::vector<char> removed;
  std::vector<char> pocket;         // 0 unknown, 1 finite, 2 infinite
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> adj_at;
  std::vector<std::uint8_t> adj_len;
  std::vector<std::uint32_t> adj;
  std::vector<Vertex> buf;

  std::uint64_t cap;

  Workspace(const GraphSpec& s, std::uint64_t c) : spec(s), cap(c) {}

  std::pair<std::uint32_t, bool> intern(const Vertex& v) {
    auto r = index.intern(v);
    if (r.second) {
      if (index.size() > cap)
        throw LimitError("build_network: search met more than " + std::to_string(cap) + " vertices");
      dist.push_back(kNone);
      removed.push_back(0);
      pocket.push_back(0);
      stamp.push_back(0);
      label.push_back(kNone);
      adj_at.push_back(UINT64_MAX);
      adj_len.push_back(0);
    }
    return r;
  }

  std::span<const std::uint32_t> neighbors(std::uint32_t u) {
    if (adj_at[u] == UINT64_MAX) {
      spec.neighbors(index.at(u), buf);
      if (buf.size() > 255) throw Error("reduction: vertex degree above 255");
      std::uint64_t at = adj.size();
      for (const Vertex& w : buf) adj.push_back(intern(w).first);
      adj_at[u] = at;
      adj_len[u] = static_cast<std::uint8_t>(buf.size());
    }
    return {adj.data() + adj_at[u], adj_len[u]};
  }
};

BoundsProfile profile_for(const Instance& instance, const SolverOptions& options) {
  return options.profile ? *options.profile : bounds_profile(*instance.graph);
}

ReductionTrace build_network_impl(const Instance& instance, const SolverOptions& options,
                                  bool full_trace) {
  const GraphSpec& spec = *instance.graph;
  if (!spec.is_lattice_family())
    throw SpecError("build_network: family " + spec.family_name() + " has no growth bounds");
  if (instance.ignitions.empty()) throw SpecError("build_network: no ignitions");
  if (instance.budget >= static_cast<std::uint64_t>(INT64_MAX))
    throw LimitError("build_network: budget too large");

  const BoundsProfile profile = profile_for(instance, options);
  ReductionTrace tr;
  tr.removed = instance.removed;
  tr.ignitions = instance.ignitions;
  tr.radius_used =
      adjusted_L(profile, instance.budget, spec.max_degree(), instance.removed.size());
  if (tr.radius_used >= options.node_cap)
    throw LimitError("build_network: radius " + std::to_string(tr.radius_used) +
                     " exceeds the node cap " + std::to_string(options.node_cap));
  const auto radius = static_cast<std::uint32_t>(tr.radius_used);

  // The ball is capped at node_cap; pocket searches may look as far again.
  Workspace ws(spec, options.node_cap > UINT32_MAX / 2 ? UINT32_MAX - 1 : 2 * options.node_cap);
  for (const Vertex& v : instance.removed) ws.removed[ws.intern(v).first] = 1;

  // V'': ball in the full graph. Members are labelled by the ignition that
  // reached them first; labels meeting along an edge belong to one piece.
  std::vector<std::uint32_t> members;
  for (const Vertex& v : instance.ignitions) {
    const std::uint32_t id = ws.intern(v).first;
    if (ws.dist[id] == kNone) {
      ws.dist[id] = 0;
      ws.label[id] = static_cast<std::uint32_t>(members.size());
      members.push_back(id);
    }
  }
  const auto seeds = static_cast<std::uint32_t>(members.size());
  std::vector<std::uint64_t> cell_size(seeds, 1);
  std::vector<std::uint32_t> parent(seeds);
  for (std::uint32_t c = 0; c < seeds; ++c) parent[c] = c;
  auto root = [&](std::uint32_t c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  for (std::size_t h = 0; h < members.size(); ++h) {
    const std::uint32_t u = members[h];
    const std::uint32_t du = ws.dist[u];
    for (std::uint32_t w : ws.neighbors(u)) {
      if (ws.dist[w] != kNone) {
        if (ws.label[w] != ws.label[u]) parent[root(ws.label[w])] = root(ws.label[u]);
      } else if (du < radius) {
        ws.dist[w] = du + 1;
        ws.label[w] = ws.label[u];
        ++cell_size[ws.label[u]];
        members.push_back(w);
        if (members.size() > options.node_cap)
          throw LimitError("build_network: ball exceeds the node cap " +
                           std::to_string(options.node_cap));
      }
    }
  }
  auto in_a = [&](std::uint32_t w) { return ws.removed[w] || ws.dist[w] != kNone; };

  // V''': finite components of G minus (removed + ball). A pocket touching
  // the ball, together with the ball pieces it touches, is finite and
  // connected, and only ball frontier edges or edges from the pocket to
  // removed vertices leave it; so the pocket holds at most expansion(those)
  // minus the smallest piece. A pocket touching only removed vertices is
  // bounded by their edges alone.
  std::vector<std::uint32_t> anchors;
  std::uint64_t frontier = 0;
  for (std::uint32_t u : members) {
    if (ws.dist[u] != radius) continue;
    bool any = false;
    for (std::uint32_t w : ws.neighbors(u)) {
      if (ws.dist[w] != kNone) continue;
      ++frontier;
      if (!ws.removed[w]) any = true;
    }
    if (any) anchors.push_back(u);
  }
  std::uint64_t removed_outside = 0;
  for (const Vertex& v : instance.removed) {
    const std::uint32_t u = ws.index.find(v);
    if (ws.dist[u] != kNone) continue;
    ++removed_outside;
    for (std::uint32_t w : ws.neighbors(u))
      if (!in_a(w)) {
        anchors.push_back(u);
        break;
      }
  }
  const std::uint64_t delta = spec.max_degree().value();
  std::vector<std::uint64_t> piece_size(seeds, 0);
  for (std::uint32_t c = 0; c < seeds; ++c) piece_size[root(c)] += cell_size[c];
  std::uint64_t smallest_piece = UINT64_MAX;
  for (std::uint32_t c = 0; c < seeds; ++c)
    if (root(c) == c) smallest_piece = std::min(smallest_piece, piece_size[c]);
  // Tilings also obey the cell-level perimeter law; a caller's profile is used as given.
  auto expansion = [&](std::uint64_t e) {
    std::uint64_t x = expansion_bound(profile, e);
    if (const auto* p = std::get_if<PolyominoGrid>(&spec.family()); p && !options.profile)
      x = std::min(x, tiling_expansion(e, p->tiling.max_shared_edges()));
    return x;
  };
  const std::uint64_t enclosing = expansion(frontier + delta * removed_outside);
  const std::uint64_t pocket_bound =
      std::max(enclosing > smallest_piece ? enclosing - smallest_piece : 0,
               expansion(delta * removed_outside));
  auto by_vertex = [&](std::uint32_t a, std::uint32_t b) { return ws.index.at(a) < ws.index.at(b); };
  std::sort(anchors.begin(), anchors.end(), by_vertex);
  std::vector<std::uint32_t> pockets;
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> starts;
  std::uint32_t round = 0;
  for (std::uint32_t a : anchors) {
    auto nb = ws.neighbors(a);
    starts.assign(nb.begin(), nb.end());
    for (std::uint32_t start : starts) {
      if (in_a(start) || ws.pocket[start] != 0) continue;
      ++round;
      order.assign(1, start);
      ws.stamp[start] = round;
      // Meeting a vertex already known to be in an infinite component settles it.
      bool infinite = false;
      for (std::size_t h = 0; h < order.size() && !infinite; ++h) {
        for (std::uint32_t w : ws.neighbors(order[h])) {
          if (in_a(w)) continue;
          if (ws.pocket[w] == 2) {
            infinite = true;
            break;
          }
          if (ws.stamp[w] != round) {
            ws.stamp[w] = round;
            order.push_back(w);
            if (order.size() > pocket_bound) {
              infinite = true;
              break;
            }
          }
        }
      }
      for (std::uint32_t w : order) ws.pocket[w] = infinite ? 2 : 1;
      if (!infinite) pockets.insert(pockets.end(), order.begin(), order.end());
    }
  }
  std::sort(pockets.begin(), pockets.end(), by_vertex);

  // Nodes: ball members in search order, then the pockets.
  std::vector<std::uint32_t> node_ids;
  node_ids.reserve(members.size() + pockets.size());
  for (std::uint32_t u : members)
    if (!ws.removed[u]) node_ids.push_back(u);
  node_ids.insert(node_ids.end(), pockets.begin(), pockets.end());
  if (node_ids.size() + 2 > options.node_cap)
    throw LimitError("build_network: " + std::to_string(node_ids.size() + 2) +
                     " nodes exceed the node cap " + std::to_string(options.node_cap));
  std::vector<std::uint32_t> node_of(ws.index.size(), kNone);
  tr.node_to_vertex.reserve(node_ids.size() + 2);
  tr.node_to_vertex.emplace_back();
  tr.node_to_vertex.emplace_back();
  for (std::uint32_t u : node_ids) {
    node_of[u] = static_cast<std::uint32_t>(tr.node_to_vertex.size());
    tr.node_to_vertex.push_back(ws.index.at(u));
  }

  const auto n = static_cast<std::uint32_t>(tr.node_to_vertex.size());
  const auto terminal = static_cast<std::int64_t>(instance.budget) + 1;
  tr.network = FlowNetwork(n, 0, 1);
  tr.network.reserve_arcs(static_cast<std::size_t>(n) * spec.max_degree().value() + 8);
  for (const Vertex& v : instance.ignitions)
    tr.network.add_arc(0, node_of[ws.index.find(v)], terminal);
  for (std::uint32_t u : node_ids) {
    const std::uint32_t i = node_of[u];
    bool escapes = false;
    for (std::uint32_t w : ws.neighbors(u)) {
      if (ws.removed[w]) continue;
      const std::uint32_t j = w < node_of.size() ? node_of[w] : kNone;
      if (j == kNone) escapes = true;
      else if (j > i) tr.network.add_edge(i, j, 1);
    }
    if (escapes) {
      tr.network.add_arc(i, 1, terminal);
      tr.t_attached.push_back(ws.index.at(u));
    }
  }
  std::sort(tr.t_attached.begin(), tr.t_attached.end());

  tr.v_triple_prime.reserve(pockets.size());
  for (std::uint32_t u : pockets) tr.v_triple_prime.push_back(ws.index.at(u));
  if (full_trace) {
    tr.v_double_prime.reserve(members.size());
    for (std::uint32_t u : members) tr.v_double_prime.push_back(ws.index.at(u));
    tr.vertex_to_node.reserve(n);
    for (std::uint32_t i = 2; i < n; ++i) tr.vertex_to_node.emplace(tr.node_to_vertex[i], i);
  }
  return tr;
}

}  // namespace

Preprocessed preprocess(const Instance& instance, const SolverOptions& options) {
  const GraphSpec& spec = *instance.graph;
  if (!spec.is_lattice_family())
    throw SpecError("preprocess: family " + spec.family_name() + " has no growth bounds");
  for (const Vertex& v : instance.ignitions)
    if (std::binary_search(instance.removed.begin(), instance.removed.end(), v))
      throw SpecError("preprocess: ignition " + to_string(v) + " is removed");

  Preprocessed out{instance, {}, {}};
  if (instance.removed.empty()) return out;

  const BoundsProfile profile = profile_for(instance, options);
  const std::uint64_t delta = spec.max_degree().value();
  const std::uint64_t bound = combined_L(profile, delta * instance.removed.size());
  OraclePtr rest = restrict(instance.graph, instance.removed_set());
  out.absorbed = finite_components_near(*rest, instance.removed, bound);
  if (out.absorbed.empty()) return out;

  std::vector<Vertex> burning;
  for (const Vertex& v : instance.ignitions)
    (std::binary_search(out.absorbed.begin(), out.absorbed.end(), v) ? out.pre_contained : burning)
        .push_back(v);
  out.instance.ignitions = std::move(burning);
  out.instance.removed.insert(out.instance.removed.end(), out.absorbed.begin(), out.absorbed.end());
  out.instance.normalize();
  return out;
}

ReductionTrace build_network(const Instance& instance, const SolverOptions& options) {
  return build_network_impl(instance, options, true);
}

Verdict solve_lattice(const Instance& instance, const SolverOptions& options) {
  Preprocessed pre = preprocess(instance, options);
  Verdict verdict;
  verdict.pre_contained = pre.pre_contained;
  if (pre.instance.ignitions.empty()) {
    verdict.contained = true;
    verdict.cut = CutSystem{};
    verdict.min_cut_value = 0;
    return verdict;
  }

  ReductionTrace tr = build_network_impl(pre.instance, options, options.keep_trace);
  const auto budget = static_cast<std::int64_t>(pre.instance.budget);
  CutResult flow = max_flow(tr.network, options.exact_min_cut ? std::nullopt
                                                                : std::optional<std::int64_t>(budget));
  if (!flow.exceeded) verdict.min_cut_value = flow.value;
  verdict.contained = !flow.exceeded && flow.value <= budget;
  if (verdict.contained) {
    std::vector<Edge> edges;
    const auto& arcs = tr.network.arcs();
    for (std::size_t i : flow.cut_arcs) {
      const Arc& a = arcs[i];
      if (a.tail < 2 || a.head < 2)
        throw Error("solve: terminal arc in a cut within budget");
      edges.emplace_back(tr.node_to_vertex[a.tail], tr.node_to_vertex[a.head]);
    }
    verdict.cut = CutSystem::from(std::move(edges));
  }
  if (options.keep_trace) verdict.trace = std::move(tr);
  return verdict;
}

Verdict solve(const Instance& instance, const SolverOptions& options) {
  instance.validate();
  const GraphSpec& spec = *instance.graph;
  if (spec.is_lattice_family()) return solve_lattice(instance, options);
  if (std::holds_alternative<HubGraph>(spec.family())) return solve_rayfree(instance, options);
  SInstance si = from_instance(instance);
  if (instance.ignitions.empty()) {
    Verdict v;
    v.contained = true;
    v.cut = CutSystem{};
    v.min_cut_value = 0;
    return v;
  }
  return solve_s_instance(si);
}

bool verify_cut(const Instance& instance, const CutSystem& cut) {
  instance.validate();
  const GraphSpec& spec = *instance.graph;
  if (std::holds_alternative<HubGraph>(spec.family())) return verify_cut_rayfree(instance, cut);
  if (std::holds_alternative<StarOfSubsets>(spec.family())) {
    SInstance si = from_instance(instance);
    if (instance.ignitions.empty()) {
      si.f.clauses.push_back({1});  // no tail and no ray: only the edges are checked
      si.f.clauses.push_back({-1});
      si.extra_ray = false;
    }
    return verify_s_cut(si, cut);
  }

  OraclePtr cut_graph = apply_cut(restrict(instance.graph, instance.removed_set()), cut);
  if (cut.size() > instance.budget) return false;
  const std::uint64_t bound = adjusted_L(bounds_profile(spec), instance.budget, spec.max_degree(),
                                         instance.removed.size());
  for (const Vertex& v : instance.ignitions)
    if (!component_bounded(*cut_graph, v, bound).finite) return false;
  return true;
}

}  // namespace firecut
