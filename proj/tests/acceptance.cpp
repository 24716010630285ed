// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "firecut/bounds.hpp"
#include "firecut/errors.hpp"
#include "firecut/explorer.hpp"
#include "firecut/flow.hpp"
#include "firecut/gadgets.hpp"
#include "firecut/generate.hpp"
#include "firecut/io.hpp"
#include "firecut/oracle.hpp"
#include "firecut/rayfree.hpp"
#include "firecut/solver.hpp"
#include "helpers.hpp"

using namespace firecut;
using namespace fc_test;

namespace {

// Tolerances. Every comparison is exact; only wall-clock limits have slack.
constexpr double kBallSeconds = 1.0;
constexpr double kPerimeterSeconds = 30.0;
constexpr double kAgreementSeconds = 300.0;
constexpr double kGadgetSeconds = 60.0;
constexpr std::uint64_t kAgreementSeed = 20240601;
constexpr std::uint64_t kNodeCap = 5'000'000;

int failures = 0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& what, const std::string& detail, double secs) {
  if (!ok) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.2f s", secs);
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << what << ": " << detail << " (" << t << ")"
            << std::endl;
}

SolverOptions opts() {
  SolverOptions o;
  o.node_cap = kNodeCap;
  return o;
}

std::uint64_t ceil_2sqrt(std::uint64_t p) {
  // smallest m with m*m >= 4p
  std::uint64_t m = 0;
  while (m * m < 4 * p) ++m;
  return m;
}

void ball_formula() {
  const auto t0 = Clock::now();
  OraclePtr o = make_oracle(std::make_shared<const GraphSpec>(GraphSpec::infinite_grid()));
  int bad = 0;
  for (std::uint64_t k = 0; k <= 20; ++k) {
    const auto got = ball(*o, std::vector<Vertex>{g(0, 0)}, k).members.size();
    if (got != 1 + 2 * k * (k + 1)) ++bad;
  }
  const double s = since(t0);
  report(1, bad == 0 && s < kBallSeconds, "grid ball 1+2K(K+1), K=0..20",
         std::to_string(21 - bad) + "/21 exact", s);
}

void perimeter_bound() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (std::uint32_t p = 1; p <= 10; ++p) {
    const auto polys = oracle::enumerate_polyominoes(p);
    std::uint32_t lo = UINT32_MAX;
    for (const auto& q : polys) lo = std::min(lo, oracle::perimeter(q));
    const auto bound = 2 * ceil_2sqrt(p);
    if (lo < bound || lo != bound) ok = false;
    detail << (p > 1 ? " " : "") << "p" << p << ":" << polys.size() << "/" << lo;
  }
  const double s = since(t0);
  report(2, ok && s < kPerimeterSeconds, "min perimeter = 2ceil(2sqrt p), p<=10",
         "count/min " + detail.str(), s);
}

struct Case {
  Instance inst;
  Verdict verdict;
};

void agreement(std::vector<Case>& batch) {
  const auto t0 = Clock::now();
  Rng rng(kAgreementSeed);
  int agree = 0, contained = 0, bad_cuts = 0, errors = 0;
  for (int k = 0; k < 200; ++k) {
    GridGenParams p;
    p.ignitions = static_cast<std::uint32_t>(rng.between(1, 3));
    p.removed = static_cast<std::uint32_t>(rng.between(0, 4));
    p.budget = static_cast<std::uint64_t>(rng.between(0, 6));
    p.window = 8;
    Instance inst = generate_grid(p, rng.below(UINT64_MAX));
    try {
      Verdict v = solve(inst, opts());
      Verdict b = oracle::brute_force_solve(inst, oracle::complete_window(inst));
      if (v.contained == b.contained) ++agree;
      if (v.contained) {
        ++contained;
        if (!v.cut || v.cut->size() > inst.budget || !verify_cut(inst, *v.cut)) ++bad_cuts;
      }
      batch.push_back({inst, v});
    } catch (const Error& e) {
      ++errors;
      std::cout << "  error on " << instance_to_json(inst).dump() << ": " << e.what() << "\n";
    }
  }
  const double s = since(t0);
  report(3, agree == 200 && bad_cuts == 0 && errors == 0 && s < kAgreementSeconds,
         "solve vs brute force on 200 random grid instances",
         std::to_string(agree) + "/200 agree, " + std::to_string(contained) + " contained, " +
             std::to_string(bad_cuts) + " bad cuts, " + std::to_string(errors) + " errors",
         s);
}

void exact_answers() {
  const auto t0 = Clock::now();
  const Verdict a3 = solve(grid_instance({g(0, 0)}, {}, 3));
  const Verdict a4 = solve(grid_instance({g(0, 0)}, {}, 4));
  const Verdict b5 = solve(grid_instance({g(0, 0), g(1, 0)}, {}, 5));
  const Verdict b6 = solve(grid_instance({g(0, 0), g(1, 0)}, {}, 6));
  const bool ok = !a3.contained && a4.contained && a4.cut && a4.cut->size() == 4 && !b5.contained &&
                  b6.contained && b6.cut && b6.cut->size() <= 6;
  std::ostringstream d;
  d << "single B=3 " << a3.contained << ", B=4 " << a4.contained << " cut " << (a4.cut ? a4.cut->size() : 0)
    << "; pair B=5 " << b5.contained << ", B=6 " << b6.contained << " cut " << (b6.cut ? b6.cut->size() : 0);
  report(4, ok, "exact small answers", d.str(), since(t0));
}

void polyomino_parity() {
  const auto t0 = Clock::now();
  Rng rng(kAgreementSeed + 5);
  int same = 0;
  for (int k = 0; k < 50; ++k) {
    GridGenParams p;
    p.ignitions = static_cast<std::uint32_t>(rng.between(1, 3));
    p.removed = static_cast<std::uint32_t>(rng.between(0, 4));
    p.budget = static_cast<std::uint64_t>(rng.between(0, 6));
    Instance grid = generate_grid(p, rng.below(UINT64_MAX));
    Instance poly = as_unit_polyomino(grid);
    const Verdict a = solve(grid, opts());
    const Verdict b = solve(poly, opts());
    if (a.contained == b.contained && (!b.cut || verify_cut(poly, *b.cut))) ++same;
  }
  report(5, same == 50, "unit-square tiling matches the grid", std::to_string(same) + "/50", since(t0));
}

void rayfree_agreement() {
  const auto t0 = Clock::now();
  Rng rng(kAgreementSeed + 6);
  int agree = 0, contained = 0;
  for (int k = 0; k < 100; ++k) {
    HubGenParams p;
    p.explicit_size = static_cast<std::uint32_t>(rng.between(2, 12));
    p.hubs = static_cast<std::uint32_t>(rng.between(1, std::max<std::int64_t>(1, p.explicit_size / 3)));
    p.removed = static_cast<std::uint32_t>(rng.between(0, 1));
    p.budget = static_cast<std::uint64_t>(rng.between(0, 3));
    if (p.hubs + 1 > p.explicit_size) p.hubs = p.explicit_size - 1;
    Instance inst = generate_hub(p, rng.below(UINT64_MAX));
    const Verdict v = solve(inst);
    const Verdict b = oracle::brute_force_rayfree(inst);
    const bool cut_ok = !v.contained || (v.cut && verify_cut(inst, *v.cut));
    if (v.contained == b.contained && cut_ok) ++agree;
    contained += v.contained;
  }
  report(6, agree == 100, "ray-free solver vs exhaustive cuts on 100 hub graphs",
         std::to_string(agree) + "/100 agree, " + std::to_string(contained) + " contained", since(t0));
}

void gadget_biconditional() {
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, Cnf>> fixtures{
      {"x1", Cnf{1, {{1}}}},
      {"x1 & !x1", Cnf{1, {{1}, {-1}}}},
      {"all four 2-clauses", Cnf{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}}},
      {"chain", Cnf{3, {{1}, {-1, 2}, {-2, 3}}}},
      {"chain to contradiction", Cnf{3, {{1}, {-1, 2}, {-2, 3}, {-3}}}},
      // three pigeons, two holes: p(i,h) is variable 2i+h+1
      {"pigeonhole 3/2", Cnf{6, {{1, 2}, {3, 4}, {5, 6}, {-1, -3}, {-1, -5}, {-3, -5}, {-2, -4}, {-2, -6}, {-4, -6}}}},
  };
  const std::vector<bool> expect_sat{true, false, false, true, false, false};
  int ok = 0, sat = 0, total = 0;
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const bool gadget_open = !solve_s_instance(build_sat_gadget(fixtures[k].second)).contained;
    ok += gadget_open == expect_sat[k] && oracle::brute_force_sat(fixtures[k].second) == expect_sat[k];
    ++total;
  }
  Rng rng(kAgreementSeed + 7);
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::uint32_t>(rng.between(3, 12));
    // around the threshold for a mix of answers; padded formula stays within 62 variables
    const auto m = static_cast<std::uint32_t>(rng.between(3 * n, std::min<std::int64_t>(6 * n, 62 - n)));
    Cnf f = generate_3cnf(n, m, rng.below(UINT64_MAX));
    const bool s = oracle::brute_force_sat(f);
    sat += s;
    const bool gadget_open = !solve_s_instance(build_sat_gadget(f)).contained;
    ok += gadget_open == s;
    ++total;
  }
  const double secs = since(t0);
  report(7, ok == total && secs < kGadgetSeconds, "not contained iff satisfiable",
         std::to_string(ok) + "/" + std::to_string(total) + " (random: " + std::to_string(sat) +
             " satisfiable, " + std::to_string(50 - sat) + " not)",
         secs);
}

void flow_engine() {
  const auto t0 = Clock::now();
  int nets = 0, agree = 0, dual = 0;
  // every simple digraph on 4 nodes (12 possible arcs), unit capacities
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      if (a != b) pairs.emplace_back(a, b);
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    FlowNetwork net(4, 0, 3);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) net.add_arc(pairs[k].first, pairs[k].second, 1);
    ++nets;
    agree += max_flow(net).value == brute_min_cut(net);
  }
  // random capacities, up to 12 arcs on up to 7 nodes
  Rng rng(kAgreementSeed + 8);
  for (int k = 0; k < 2000; ++k) {
    const auto nodes = static_cast<std::uint32_t>(rng.between(2, 7));
    FlowNetwork net(nodes, 0, nodes - 1);
    const auto arcs = rng.between(0, 12);
    for (std::int64_t a = 0; a < arcs; ++a) {
      const auto u = static_cast<std::uint32_t>(rng.below(nodes));
      auto v = static_cast<std::uint32_t>(rng.below(nodes - 1));
      if (v >= u) ++v;
      net.add_arc(u, v, rng.between(0, 9));
    }
    ++nets;
    agree += max_flow(net).value == brute_min_cut(net);
  }
  for (int k = 0; k < 100; ++k) {
    const auto nodes = static_cast<std::uint32_t>(rng.between(2, 40));
    FlowNetwork net(nodes, 0, nodes - 1);
    const auto arcs = rng.between(0, 150);
    for (std::int64_t a = 0; a < arcs; ++a) {
      const auto u = static_cast<std::uint32_t>(rng.below(nodes));
      auto v = static_cast<std::uint32_t>(rng.below(nodes - 1));
      if (v >= u) ++v;
      if (rng.coin())
        net.add_arc(u, v, rng.between(0, 20));
      else
        net.add_edge(u, v, rng.between(0, 20));
    }
    dual += assert_duality(net, max_flow(net));
  }
  report(8, agree == nets && dual == 100, "max flow = brute-force min cut; duality",
         std::to_string(agree) + "/" + std::to_string(nets) + " networks, duality " + std::to_string(dual) + "/100",
         since(t0));
}

void network_size() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  const auto prof = bounds_profile(GraphSpec::infinite_grid());
  for (std::uint64_t b = 1; b <= 8; ++b) {
    const ReductionTrace t = build_network(grid_instance({g(0, 0)}, {}, b), opts());
    const std::uint64_t r = combined_L(prof, b);
    const std::uint64_t want = 2 + (1 + 2 * r * (r + 1));
    if (t.network.node_count() != want || t.radius_used != r) ok = false;
    d << (b > 1 ? " " : "") << "B" << b << ":" << t.network.node_count();
  }
  report(9, ok, "node count = 2 + ball(combined_L(B)), B=1..8", d.str(), since(t0));
}

void monotone_and_inflation(const std::vector<Case>& batch) {
  const auto t0 = Clock::now();
  int mono = 0, mono_total = 0, same = 0;
  for (const Case& c : batch) {
    if (c.verdict.contained) {
      ++mono_total;
      Instance up = c.inst;
      up.budget += 1;
      mono += solve(up, opts()).contained;
    }
    SolverOptions o = opts();
    o.profile = scale_expansion(bounds_profile(*c.inst.graph), 2);
    const Verdict w = solve(c.inst, o);
    const bool cut_same = !w.contained || (w.cut && c.verdict.cut && w.cut->size() == c.verdict.cut->size());
    same += w.contained == c.verdict.contained && cut_same;
  }
  const auto total = static_cast<int>(batch.size());
  report(10, mono == mono_total && same == total && total == 200,
         "monotone in B; doubled expansion bound changes nothing",
         "monotone " + std::to_string(mono) + "/" + std::to_string(mono_total) + ", inflation " +
             std::to_string(same) + "/" + std::to_string(total),
         since(t0));
}

}  // namespace

int main() {
  ball_formula();
  perimeter_bound();
  std::vector<Case> batch;
  agreement(batch);
  exact_answers();
  polyomino_parity();
  rayfree_agreement();
  gadget_biconditional();
  flow_engine();
  network_size();
  monotone_and_inflation(batch);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
