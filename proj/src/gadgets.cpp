#include "firecut/gadgets.hpp"

#include <algorithm>
#include <cstdlib>

#include "firecut/errors.hpp"
#include "firecut/oracle.hpp"

namespace firecut {
namespace {

constexpr std::uint32_t kMaxStarVars = 62;

std::string leaf(std::uint32_t n, std::uint64_t a) {
  std::string s = "x:";
  for (std::uint32_t k = 0; k < n; ++k) s += ((a >> k) & 1U) ? '1' : '0';
  return s;
}

struct Search {
  const Cnf& f;
  std::uint64_t limit;
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> found;

  void run(std::uint32_t k, std::uint64_t values) {
    if (found.size() >= limit) return;
    if (++nodes > cap)
      throw LimitError("assignment search exceeds " + std::to_string(cap) + " nodes");
    // Variables below k are assigned.
    bool all_satisfied = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      bool open = false;
      for (std::int32_t lit : clause) {
        const auto var = static_cast<std::uint32_t>(std::abs(lit)) - 1;
        if (var >= k) {
          open = true;
          continue;
        }
        if ((((values >> var) & 1U) != 0) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat && !open) return;
      if (!sat) all_satisfied = false;
    }
    if (all_satisfied) {
      // Every completion of the free variables counts.
      const std::uint32_t free = f.n_vars - k;
      for (std::uint64_t c = 0; found.size() < limit; ++c) {
        found.push_back(values | (c << k));
        if (free < 64 && c + 1 == (std::uint64_t{1} << free)) break;
      }
      return;
    }
    run(k + 1, values);
    run(k + 1, values | (std::uint64_t{1} << k));
  }
};

const StarOfSubsets& star_family(const GraphSpec& spec) {
  const auto* s = std::get_if<StarOfSubsets>(&spec.family());
  if (s == nullptr) throw SpecError("expected a star_of_subsets instance, got " + spec.family_name());
  return *s;
}

}  // namespace

SInstance build_sat_gadget(const Cnf& cnf) {
  cnf.validate();
  if (cnf.clauses.empty()) throw SpecError("gadget: formula has no clauses");
  const std::uint64_t m = cnf.clauses.size();
  if (cnf.n_vars + m > kMaxStarVars)
    throw SpecError("gadget: padded formula needs " + std::to_string(cnf.n_vars + m) +
                    " variables, at most " + std::to_string(kMaxStarVars) + " supported");
  SInstance si;
  si.f = cnf;
  std::vector<std::int32_t> pad;
  for (std::uint64_t k = 1; k <= m; ++k) pad.push_back(static_cast<std::int32_t>(cnf.n_vars + k));
  si.f.n_vars = static_cast<std::uint32_t>(cnf.n_vars + m);
  si.f.clauses.push_back(std::move(pad));
  si.n_vars = si.f.n_vars;
  si.extra_ray = true;
  si.budget = 1;
  return si;
}

std::vector<std::uint64_t> satisfying_assignments(const Cnf& f, std::uint64_t limit,
                                                  std::uint64_t search_cap) {
  f.validate();
  if (f.n_vars > kMaxStarVars) throw SpecError("formula has too many variables");
  Search s{f, limit, search_cap, 0, {}};
  s.run(0, 0);
  return std::move(s.found);
}

Verdict solve_s_instance(const SInstance& si, std::uint64_t search_cap) {
  if (si.f.n_vars != si.n_vars) throw SpecError("star: variable count mismatch");
  const std::uint64_t extra = si.extra_ray ? 1 : 0;
  // One ray more than the budget settles the answer.
  const std::uint64_t wanted =
      si.budget == UINT64_MAX ? UINT64_MAX : si.budget + 1 - extra;
  const auto tails = satisfying_assignments(si.f, wanted, search_cap);
  Verdict verdict;
  const std::uint64_t rays = tails.size() + extra;
  verdict.contained = rays <= si.budget;
  if (verdict.contained) {
    std::vector<Edge> edges;
    for (std::uint64_t a : tails) edges.emplace_back(Vertex::named("o"), Vertex::named(leaf(si.n_vars, a)));
    if (si.extra_ray) edges.emplace_back(Vertex::named("o"), Vertex::named("ray/1"));
    verdict.cut = CutSystem::from(std::move(edges));
    verdict.min_cut_value = static_cast<std::int64_t>(rays);
  }
  return verdict;
}

bool check_no_certificate(const SInstance& si, const std::vector<std::uint64_t>& assignments) {
  std::vector<std::uint64_t> a = assignments;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  for (std::uint64_t x : a) {
    if (si.n_vars < 64 && (x >> si.n_vars) != 0) return false;
    if (!si.f.satisfied_by(x)) return false;
  }
  return a.size() + (si.extra_ray ? 1 : 0) > si.budget;
}

bool cross_check_gadget(const Cnf& cnf) {
  const bool sat = oracle::brute_force_sat(cnf);
  return !solve_s_instance(build_sat_gadget(cnf)).contained == sat;
}

Instance to_instance(const SInstance& si) {
  Instance inst;
  Cnf f = si.f;
  f.n_vars = si.n_vars;
  inst.graph = std::make_shared<const GraphSpec>(GraphSpec::star_of_subsets(std::move(f), si.extra_ray));
  inst.ignitions = {Vertex::named("o")};
  inst.budget = si.budget;
  return inst;
}

SInstance from_instance(const Instance& instance) {
  const StarOfSubsets& s = star_family(*instance.graph);
  if (!instance.removed.empty()) throw SpecError("star instances take no removed vertices");
  for (const Vertex& v : instance.ignitions)
    if (v != Vertex::named("o")) throw SpecError("star instances ignite the center only");
  SInstance si;
  si.n_vars = s.f.n_vars;
  si.f = s.f;
  si.extra_ray = s.extra_ray;
  si.budget = instance.budget;
  return si;
}

bool verify_s_cut(const SInstance& si, const CutSystem& cut, std::uint64_t search_cap) {
  const GraphSpec spec = GraphSpec::star_of_subsets(si.f, si.extra_ray);
  const Vertex center = Vertex::named("o");
  absl::flat_hash_set<std::uint64_t> blocked;
  bool ray_blocked = false;
  for (const Edge& e : cut.edges) {
    // Probe from the side that is not the center; its degree is at most 2.
    const Vertex& p = e.first() == center ? e.second() : e.first();
    if (!spec.contains(p) || !spec.contains(e.other(p)))
      throw GraphError("cut edge " + to_string(e) + " leaves the star");
    auto nb = spec.neighbors(p);
    if (!std::binary_search(nb.begin(), nb.end(), e.other(p)))
      throw GraphError("cut edge " + to_string(e) + " is not a star edge");
    const std::string& id = p.as_named().id;
    if (id.rfind("ray/", 0) == 0) {
      ray_blocked = true;
      continue;
    }
    std::uint64_t a = 0;
    for (std::uint32_t k = 0; k < si.n_vars; ++k)
      if (id[2 + k] == '1') a |= std::uint64_t{1} << k;
    if (si.f.satisfied_by(a)) blocked.insert(a);
  }
  if (cut.size() > si.budget) return false;
  if (si.extra_ray && !ray_blocked) return false;
  // Blocked tails are satisfying; all tails are blocked iff there is no other.
  return satisfying_assignments(si.f, blocked.size() + 1, search_cap).size() <= blocked.size();
}

}  // namespace firecut
