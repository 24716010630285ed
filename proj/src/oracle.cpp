#include "firecut/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "firecut/bounds.hpp"
#include "firecut/errors.hpp"

namespace firecut::oracle {
namespace {

// Smallest c with c*c >= x.
std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t c = 0;
  while (c * c < x) ++c;
  return c;
}

// Burned-region search on an index-based copy of the window.
class RegionSearch {
 public:
  RegionSearch(const Instance& inst, std::uint64_t radius) : budget_(inst.budget) {
    const GraphSpec& spec = *inst.graph;
    const VertexSet removed = inst.removed_set();

    VertexMap<int> index;
    std::vector<Vertex> verts;
    std::vector<std::uint64_t> dist;
    for (const Vertex& v : inst.ignitions) {
      index.emplace(v, static_cast<int>(verts.size()));
      verts.push_back(v);
      dist.push_back(0);
    }
    std::vector<Vertex> buf;
    for (std::size_t h = 0; h < verts.size(); ++h) {
      if (dist[h] == radius) continue;
      spec.neighbors(verts[h], buf);
      for (const Vertex& w : buf)
        if (index.emplace(w, static_cast<int>(verts.size())).second) {
          verts.push_back(w);
          dist.push_back(dist[h] + 1);
        }
    }
    const std::size_t n = verts.size();
    adj_.resize(n);
    outside_.assign(n, 0);
    state_.assign(n, kFree);
    burned_nb_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (removed.contains(verts[v])) state_[v] = kRemoved;
      spec.neighbors(verts[v], buf);
      for (const Vertex& w : buf) {
        auto it = index.find(w);
        if (it != index.end()) adj_[v].push_back(it->second);
        else if (!removed.contains(w)) ++outside_[v];
      }
    }
    removed_edges_ = 0;
    for (const Vertex& r : inst.removed) {
      spec.neighbors(r, buf);
      for (const Vertex& w : buf) removed_edges_ += removed.contains(w) ? 0 : 1;
    }
    if (std::holds_alternative<InfiniteGrid>(spec.family())) {
      cell_cap_ = max_burned_cells(budget_, removed_edges_);
    } else {
      cell_cap_ = expansion_bound(bounds_profile(spec), budget_ + removed_edges_);
    }
    verts_ = std::move(verts);
  }

  Verdict run(const std::vector<Vertex>& ignitions) {
    Verdict verdict;
    best_ = budget_ + 1;
    bool ok = true;
    for (std::size_t k = 0; k < ignitions.size(); ++k) ok = burn(static_cast<int>(k)) && ok;
    if (ok && burned_.size() <= cell_cap_) dfs();
    if (best_ <= budget_) {
      verdict.contained = true;
      verdict.cut = CutSystem::from(best_cut_);
      verdict.min_cut_value = static_cast<std::int64_t>(best_);
    }
    return verdict;
  }

 private:
  enum State : char { kFree, kBurned, kExcluded, kRemoved };

  // Returns false when v has a live neighbor outside the window.
  bool burn(int v) {
    state_[v] = kBurned;
    frontier_.erase(v);
    burned_.push_back(v);
    for (int u : adj_[v]) {
      if (state_[u] == kExcluded) ++cost_;
      if (state_[u] == kFree && burned_nb_[u] == 0) frontier_.insert(u);
      ++burned_nb_[u];
    }
    return outside_[v] == 0;
  }
  void unburn(int v) {
    burned_.pop_back();
    for (int u : adj_[v]) {
      --burned_nb_[u];
      if (state_[u] == kExcluded) --cost_;
      if (state_[u] == kFree && burned_nb_[u] == 0) frontier_.erase(u);
    }
    state_[v] = kFree;
    frontier_.insert(v);
  }

  void dfs() {
    if (++nodes_ > kSearchCap)
      throw LimitError("brute-force search exceeds " + std::to_string(kSearchCap) + " nodes");
    if (cost_ >= best_) return;
    if (frontier_.empty()) {
      best_ = cost_;
      best_cut_.clear();
      for (int v : burned_)
        for (int u : adj_[v])
          if (state_[u] == kExcluded) best_cut_.emplace_back(verts_[v], verts_[u]);
      return;
    }
    const int v = *frontier_.begin();
    if (outside_[v] == 0 && burned_.size() < cell_cap_) {
      burn(v);
      dfs();
      unburn(v);
    }
    state_[v] = kExcluded;
    frontier_.erase(v);
    cost_ += burned_nb_[v];
    dfs();
    cost_ -= burned_nb_[v];
    state_[v] = kFree;
    frontier_.insert(v);
  }

  std::uint64_t budget_;
  std::vector<Vertex> verts_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint32_t> outside_;
  std::vector<State> state_;
  std::vector<std::uint32_t> burned_nb_;
  std::set<int> frontier_;
  std::vector<int> burned_;
  std::uint64_t cost_ = 0;
  std::uint64_t best_ = 0;
  std::vector<Edge> best_cut_;
  std::uint64_t removed_edges_ = 0;
  std::uint64_t cell_cap_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t max_burned_cells(std::uint64_t budget, std::uint64_t removed_edges) {
  const std::uint64_t allowed = budget + removed_edges;
  std::uint64_t p = 0;
  while (2 * ceil_sqrt(4 * (p + 1)) <= allowed) ++p;
  return p;
}

std::uint64_t complete_window(const Instance& instance) {
  const GraphSpec& spec = *instance.graph;
  const VertexSet removed = instance.removed_set();
  std::uint64_t removed_edges = 0;
  for (const Vertex& r : instance.removed)
    for (const Vertex& w : spec.neighbors(r)) removed_edges += removed.contains(w) ? 0 : 1;
  // A burned cell lies within cells - 1 steps of an ignition; its fence one further.
  if (std::holds_alternative<InfiniteGrid>(spec.family()))
    return std::max<std::uint64_t>(1, max_burned_cells(instance.budget, removed_edges));
  return std::max<std::uint64_t>(
      1, expansion_bound(bounds_profile(spec), instance.budget + removed_edges));
}

Verdict brute_force_solve(const Instance& instance, std::uint64_t window_radius) {
  if (!instance.graph->is_lattice_family())
    throw SpecError("brute_force_solve: lattice families only");
  if (instance.ignitions.empty()) {
    Verdict v;
    v.contained = true;
    v.cut = CutSystem{};
    v.min_cut_value = 0;
    return v;
  }
  RegionSearch search(instance, window_radius);
  return search.run(instance.ignitions);
}

std::vector<Polyomino> enumerate_polyominoes(std::uint32_t p) {
  if (p == 0 || p > kMaxPolyominoCells)
    throw LimitError("enumerate_polyominoes: p must be in [1, " +
                     std::to_string(kMaxPolyominoCells) + "]");
  std::set<std::vector<std::pair<int, int>>> level{{{0, 0}}};
  for (std::uint32_t size = 1; size < p; ++size) {
    std::set<std::vector<std::pair<int, int>>> next;
    for (const auto& cells : level) {
      for (const auto& [i, j] : cells) {
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          std::pair<int, int> c{i + di, j + dj};
          if (std::binary_search(cells.begin(), cells.end(), c)) continue;
          auto grown = cells;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
          const auto origin = grown.front();
          for (auto& g : grown) g = {g.first - origin.first, g.second - origin.second};
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Polyomino> out;
  out.reserve(level.size());
  for (const auto& cells : level) out.push_back(Polyomino{cells});
  return out;
}

std::uint32_t perimeter(const Polyomino& poly) {
  std::uint32_t count = 0;
  for (const auto& [i, j] : poly.cells)
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      if (!std::binary_search(poly.cells.begin(), poly.cells.end(), std::pair{i + di, j + dj}))
        ++count;
  return count;
}

std::optional<std::uint64_t> find_satisfying(const Cnf& cnf) {
  if (cnf.n_vars > kMaxSatVars)
    throw LimitError("brute_force_sat: more than " + std::to_string(kMaxSatVars) + " variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.n_vars); ++a) {
    bool all = true;
    for (const auto& clause : cnf.clauses) {
      bool any = false;
      for (std::int32_t lit : clause) {
        const bool value = (a >> (std::abs(lit) - 1)) & 1U;
        if (value == (lit > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return a;
  }
  return std::nullopt;
}

bool brute_force_sat(const Cnf& cnf) { return find_satisfying(cnf).has_value(); }

Verdict brute_force_rayfree(const Instance& instance) {
  const auto* h = std::get_if<HubGraph>(&instance.graph->family());
  if (h == nullptr) throw SpecError("brute_force_rayfree: hub graphs only");
  Verdict verdict;
  for (const Vertex& v : instance.ignitions)
    if (h->hubs.contains(v)) {
      verdict.reason = "infinite-degree ignition";
      return verdict;
    }

  const VertexSet removed = instance.removed_set();
  VertexMap<int> index;
  for (const Vertex& v : h->vertices) index.emplace(v, static_cast<int>(index.size()));
  std::vector<std::pair<int, int>> edges;
  std::vector<Edge> named;
  for (const Edge& e : h->edges)
    if (!removed.contains(e.first()) && !removed.contains(e.second())) {
      edges.emplace_back(index.at(e.first()), index.at(e.second()));
      named.push_back(e);
    }
  const int n = static_cast<int>(index.size());
  std::vector<char> hub(n, 0);
  for (const Vertex& v : h->hubs) hub[index.at(v)] = 1;
  std::vector<int> starts;
  for (const Vertex& v : instance.ignitions) starts.push_back(index.at(v));

  const std::size_t m = edges.size();
  std::vector<char> cut(m, 0);
  auto reaches_hub = [&] {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = starts;
    for (int s : starts) seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (hub[u]) return true;
      for (std::size_t k = 0; k < m; ++k) {
        if (cut[k]) continue;
        int w = -1;
        if (edges[k].first == u) w = edges[k].second;
        else if (edges[k].second == u) w = edges[k].first;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  std::uint64_t candidates = 0;
  const std::size_t kmax = std::min<std::uint64_t>(instance.budget, m);
  for (std::size_t k = 0; k <= kmax; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++candidates > kSearchCap)
        throw LimitError("brute_force_rayfree: more than " + std::to_string(kSearchCap) + " candidates");
      std::fill(cut.begin(), cut.end(), 0);
      for (std::size_t i : pick) cut[i] = 1;
      if (!reaches_hub()) {
        std::vector<Edge> chosen;
        for (std::size_t i : pick) chosen.push_back(named[i]);
        verdict.contained = true;
        verdict.cut = CutSystem::from(std::move(chosen));
        verdict.min_cut_value = static_cast<std::int64_t>(k);
        return verdict;
      }
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return verdict;
}

}  // namespace firecut::oracle
