// firecut: command-line front end.
// Exit codes: 0 contained / success, 1 not contained / mismatch, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "firecut/bounds.hpp"
#include "firecut/errors.hpp"
#include "firecut/gadgets.hpp"
#include "firecut/generate.hpp"
#include "firecut/io.hpp"
#include "firecut/oracle.hpp"
#include "firecut/rayfree.hpp"
#include "firecut/render.hpp"
#include "firecut/solver.hpp"

using namespace firecut;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Instance read_instance(const std::string& path) { return parse_instance_text(slurp(path)); }

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path);
  out << text;
}

json verdict_json(const Verdict& v) {
  json j;
  j["version"] = kFormatVersion;
  j["contained"] = v.contained;
  j["cut"] = v.cut ? cut_to_json(*v.cut) : json(nullptr);
  j["min_cut_value"] = v.min_cut_value ? json(*v.min_cut_value) : json(nullptr);
  j["pre_contained"] = json::array();
  for (const Vertex& p : v.pre_contained) j["pre_contained"].push_back(vertex_to_json(p));
  j["reason"] = v.reason;
  if (v.trace) {
    const ReductionTrace& t = *v.trace;
    j["trace"] = {{"radius", t.radius_used},
                  {"v_double_prime", t.v_double_prime.size()},
                  {"v_triple_prime", t.v_triple_prime.size()},
                  {"t_attached", t.t_attached.size()},
                  {"removed", t.removed.size()},
                  {"nodes", t.network.node_count()},
                  {"arcs", t.network.arcs().size() / 2}};
  }
  return j;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_json(v).dump() << "\n";
    return;
  }
  std::cout << (v.contained ? "contained" : "not contained");
  if (v.cut) std::cout << " with " << v.cut->size() << " cut edge(s)";
  if (v.min_cut_value) std::cout << ", min cut " << *v.min_cut_value;
  if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
  std::cout << "\n";
  if (v.cut)
    for (const Edge& e : v.cut->edges) std::cout << "  " << to_string(e) << "\n";
  if (!v.pre_contained.empty())
    std::cout << v.pre_contained.size() << " ignition(s) already enclosed by removed vertices\n";
}

void print_trace(const Instance& inst, const Verdict& v) {
  if (v.trace) {
    const ReductionTrace& t = *v.trace;
    std::cout << "radius " << t.radius_used << "\n"
              << "V'' " << t.v_double_prime.size() << " vertices\n"
              << "V''' " << t.v_triple_prime.size() << " vertices\n"
              << "sink-attached " << t.t_attached.size() << "\n"
              << "network " << t.network.node_count() << " nodes, " << t.network.arcs().size() / 2
              << " arcs\n";
  } else if (std::holds_alternative<HubGraph>(inst.graph->family()) && !v.reason.size()) {
    const HatSets h = build_hat_sets(inst);
    std::cout << "V^ " << h.v_hat.size() << " vertices, V^inf " << h.v_hat_inf.size() << " hubs, "
              << h.induced_edges.size() << " edges\n";
  }
  if (auto pic = render_grid(inst, v)) std::cout << *pic;
}

int verdict_code(const Verdict& v) { return v.contained ? 0 : 1; }

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int bench_grid(std::uint64_t max_b) {
  int code = 0;
  std::cout << "B  radius  size  nodes  expected  build_s  solve_s\n";
  for (std::uint64_t b = 1; b <= max_b; ++b) {
    Instance inst;
    inst.graph = std::make_shared<const GraphSpec>(GraphSpec::infinite_grid());
    inst.ignitions = {Vertex::grid(0, 0)};
    inst.budget = b;
    SolverOptions opts;
    opts.node_cap = 50'000'000;
    ReductionTrace t;
    const double build = seconds([&] { t = build_network(inst, opts); });
    const double solve_s = seconds([&] { solve(inst, opts); });
    const auto r = combined_L(bounds_profile(*inst.graph), b);
    const std::uint64_t expected = 2 + grid_ball(r);
    if (t.network.node_count() != expected) code = 1;
    std::cout << b << "  " << r << "  " << instance_size(inst) << "  " << t.network.node_count()
              << "  " << expected << "  " << build << "  " << solve_s << "\n";
  }
  if (code != 0) std::cout << "node count mismatch\n";
  return code;
}

int bench_rayfree(std::uint64_t seed) {
  std::cout << "explicit  size  nodes  solve_s\n";
  std::uint64_t last_nodes = 0;
  int code = 0;
  for (std::uint32_t n = 16; n <= 1024; n *= 2) {
    HubGenParams p;
    p.explicit_size = n;
    p.hubs = n / 8;
    p.budget = 3;
    const Instance inst = generate_hub(p, seed + n);
    const HatSets h = build_hat_sets(inst);
    const std::uint64_t nodes = 2 + h.v_hat.size() + h.v_hat_inf.size();
    const double s = seconds([&] { solve(inst); });
    std::cout << n << "  " << instance_size(inst) << "  " << nodes << "  " << s << "\n";
    // Generated graphs are connected, so the network grows with the explicit part.
    if (nodes < last_nodes) code = 1;
    last_nodes = nodes;
  }
  return code;
}

struct XcheckResult {
  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
};

XcheckResult xcheck_grid(std::uint64_t count, std::uint64_t seed, bool verbose) {
  XcheckResult r;
  Rng rng(seed);
  SolverOptions opts;
  opts.node_cap = 5'000'000;
  for (std::uint64_t k = 0; k < count; ++k) {
    GridGenParams p;
    p.ignitions = static_cast<std::uint32_t>(rng.between(1, 3));
    p.removed = static_cast<std::uint32_t>(rng.between(0, 4));
    p.budget = static_cast<std::uint64_t>(rng.between(0, 6));
    const Instance inst = generate_grid(p, rng.below(UINT64_MAX));
    const Verdict a = solve(inst, opts);
    const Verdict b = oracle::brute_force_solve(inst, oracle::complete_window(inst));
    const bool ok = a.contained == b.contained && (!a.cut || verify_cut(inst, *a.cut));
    (ok ? r.agree : r.disagree)++;
    if (!ok || verbose) std::cout << (ok ? "agree " : "DISAGREE ") << instance_to_json(inst).dump() << "\n";
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firecut: wildfire containment by minimum cuts on infinite graphs"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string path, cut_path, emit_cut, dimacs_path, cnf_path, out_path = "-";
  bool trace = false, exact = false;
  std::uint64_t node_cap = SolverOptions{}.node_cap;
  std::uint64_t window = 0;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;

  auto* solve_cmd = app.add_subcommand("solve", "decide an instance file (- for stdin)");
  solve_cmd->add_option("instance", path)->required();
  solve_cmd->add_option("--emit-cut", emit_cut, "write the cut as JSON");
  solve_cmd->add_flag("--trace", trace, "print reduction sizes and a grid picture");
  solve_cmd->add_option("--node-cap", node_cap, "network node limit");
  solve_cmd->add_flag("--exact", exact, "compute the exact min cut value");
  solve_cmd->add_option("--dimacs", dimacs_path, "dump the reduction network in DIMACS max-flow form");
  solve_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "check a cut file against an instance");
  verify_cmd->add_option("instance", path)->required();
  verify_cmd->add_option("cut", cut_path)->required();
  verify_cmd->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search (lattice families and hub graphs)");
  oracle_cmd->add_option("instance", path)->required();
  oracle_cmd->add_option("--window", window, "search radius; default is a complete window");
  oracle_cmd->add_flag("--json", as_json);

  auto* gadget_cmd = app.add_subcommand("gadget", "decide the star gadget of a DIMACS CNF");
  gadget_cmd->add_option("--cnf", cnf_path)->required();
  gadget_cmd->add_option("--budget", budget, "override the gadget budget of 1");
  gadget_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->require_subcommand(1);
  GridGenParams gp;
  auto* gen_grid = gen_cmd->add_subcommand("grid");
  gen_grid->add_option("--ignitions", gp.ignitions)->check(CLI::Range(1, 64));
  gen_grid->add_option("--removed", gp.removed)->check(CLI::Range(0, 64));
  gen_grid->add_option("--budget", gp.budget);
  gen_grid->add_option("--window", gp.window)->check(CLI::Range(0, 1000));
  gen_grid->add_option("--ignition-radius", gp.ignition_radius);
  gen_grid->add_option("--removed-radius", gp.removed_radius);
  gen_grid->add_option("--seed", seed);
  gen_grid->add_option("-o,--out", out_path);
  PolyominoGenParams pp;
  auto* gen_poly = gen_cmd->add_subcommand("polyomino");
  gen_poly->add_option("--tile-size", pp.tile_size)->check(CLI::Range(1, 64));
  gen_poly->add_option("--ignitions", pp.ignitions)->check(CLI::Range(1, 64));
  gen_poly->add_option("--removed", pp.removed)->check(CLI::Range(0, 64));
  gen_poly->add_option("--budget", pp.budget);
  gen_poly->add_option("--radius", pp.radius)->check(CLI::Range(0, 1000));
  gen_poly->add_option("--seed", seed);
  gen_poly->add_option("-o,--out", out_path);
  HubGenParams hp;
  auto* gen_hub = gen_cmd->add_subcommand("hub");
  gen_hub->add_option("--explicit-size", hp.explicit_size)->check(CLI::Range(1, 100000));
  gen_hub->add_option("--hubs", hp.hubs);
  gen_hub->add_option("--ignitions", hp.ignitions);
  gen_hub->add_option("--removed", hp.removed);
  gen_hub->add_option("--budget", hp.budget);
  gen_hub->add_option("--seed", seed);
  gen_hub->add_option("-o,--out", out_path);
  std::uint32_t cnf_vars = 8, cnf_clauses = 30;
  auto* gen_cnf = gen_cmd->add_subcommand("cnf", "random 3-CNF in DIMACS form");
  gen_cnf->add_option("--vars", cnf_vars)->check(CLI::Range(3, 62));
  gen_cnf->add_option("--clauses", cnf_clauses);
  gen_cnf->add_option("--seed", seed);
  gen_cnf->add_option("-o,--out", out_path);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate ball and expansion bounds");
  std::string family;
  std::uint64_t ball_k = 0, expansion_b = 0;
  std::uint32_t tile_size = 1;
  bounds_cmd->add_option("family", family, "grid | diagonal | diagonal_both | polyomino | instance file")
      ->required();
  bounds_cmd->add_option("--ball", ball_k);
  bounds_cmd->add_option("--expansion", expansion_b);
  bounds_cmd->add_option("--tile-size", tile_size)->check(CLI::Range(1, 64));
  bounds_cmd->add_flag("--json", as_json);

  auto* bench_cmd = app.add_subcommand("bench", "timing and network-size report");
  std::string suite;
  std::uint64_t max_b = 8;
  bench_cmd->add_option("suite", suite)->required()->check(CLI::IsMember({"grid", "rayfree"}));
  bench_cmd->add_option("--max-budget", max_b)->check(CLI::Range(1, 12));
  bench_cmd->add_option("--seed", seed);

  auto* xcheck_cmd = app.add_subcommand("xcheck", "solver against brute force on random grid instances");
  std::uint64_t count = 20;
  bool verbose = false;
  xcheck_cmd->add_option("--count", count);
  xcheck_cmd->add_option("--seed", seed);
  xcheck_cmd->add_flag("-v,--verbose", verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) {
      const Instance inst = read_instance(path);
      SolverOptions opts;
      opts.node_cap = node_cap;
      opts.exact_min_cut = exact;
      opts.keep_trace = trace || !dimacs_path.empty();
      const Verdict v = solve(inst, opts);
      print_verdict(v, as_json);
      if (trace && !as_json) print_trace(inst, v);
      if (!dimacs_path.empty()) {
        if (!v.trace) throw SpecError("--dimacs needs a lattice instance with ignitions");
        write_text(dimacs_path, v.trace->network.to_dimacs());
      }
      if (!emit_cut.empty()) {
        if (v.cut)
          write_text(emit_cut, cut_to_json(*v.cut).dump(2) + "\n");
        else
          std::cerr << "firecut: not contained, no cut written\n";
      }
      return verdict_code(v);
    }
    if (*verify_cmd) {
      const Instance inst = read_instance(path);
      const CutSystem cut = parse_cut(json::parse(slurp(cut_path)));
      const bool ok = verify_cut(inst, cut);
      if (as_json)
        std::cout << json{{"version", kFormatVersion}, {"valid", ok}, {"size", cut.size()}}.dump() << "\n";
      else
        std::cout << (ok ? "valid cut" : "invalid cut") << " (" << cut.size() << " edges, budget "
                  << inst.budget << ")\n";
      return ok ? 0 : 1;
    }
    if (*oracle_cmd) {
      const Instance inst = read_instance(path);
      const Verdict v = std::holds_alternative<HubGraph>(inst.graph->family())
                            ? oracle::brute_force_rayfree(inst)
                            : oracle::brute_force_solve(
                                  inst, window > 0 ? window : oracle::complete_window(inst));
      print_verdict(v, as_json);
      return verdict_code(v);
    }
    if (*gadget_cmd) {
      const Cnf cnf = parse_dimacs_string(slurp(cnf_path));
      SInstance si = build_sat_gadget(cnf);
      if (budget) si.budget = *budget;
      const Verdict v = solve_s_instance(si);
      if (as_json) {
        json j = verdict_json(v);
        j["n_vars"] = si.n_vars;
        j["budget"] = si.budget;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "padded formula: " << si.n_vars << " variables, " << si.f.clauses.size()
                  << " clauses, budget " << si.budget << "\n";
        print_verdict(v, false);
      }
      return verdict_code(v);
    }
    if (*gen_cmd) {
      if (*gen_cnf) {
        write_text(out_path, to_dimacs(generate_3cnf(cnf_vars, cnf_clauses, seed)));
        return 0;
      }
      Instance inst = *gen_grid ? generate_grid(gp, seed)
                      : *gen_poly ? generate_polyomino(pp, seed)
                                  : generate_hub(hp, seed);
      write_text(out_path, instance_to_json(inst).dump(2) + "\n");
      return 0;
    }
    if (*bounds_cmd) {
      GraphSpec spec = family == "grid"            ? GraphSpec::infinite_grid()
                       : family == "diagonal"      ? GraphSpec::diagonal_grid(true, false)
                       : family == "diagonal_both" ? GraphSpec::diagonal_grid(true, true)
                       : family == "polyomino"     ? GraphSpec::polyomino_grid(bar_tiling(tile_size))
                                                   : *read_instance(family).graph;
      const BoundsProfile p = bounds_profile(spec);
      const std::uint64_t ball = ball_bound(p, ball_k);
      const std::uint64_t exp = expansion_bound(p, expansion_b);
      const std::uint64_t comb = combined_L(p, expansion_b);
      if (as_json)
        std::cout << json{{"family", p.family}, {"ball", ball_k}, {"ball_bound", ball},
                          {"expansion", expansion_b}, {"expansion_bound", exp}, {"combined_L", comb}}
                         .dump()
                  << "\n";
      else
        std::cout << p.family << ": ball(" << ball_k << ") = " << ball << ", expansion(" << expansion_b
                  << ") = " << exp << ", combined_L(" << expansion_b << ") = " << comb << "\n";
      return 0;
    }
    if (*bench_cmd) return suite == "grid" ? bench_grid(max_b) : bench_rayfree(seed);
    if (*xcheck_cmd) {
      const XcheckResult r = xcheck_grid(count, seed, verbose);
      std::cout << r.agree << " agree, " << r.disagree << " disagree\n";
      return r.disagree == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "firecut: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
