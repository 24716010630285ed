#include <doctest.h>

#include "firecut/errors.hpp"
#include "firecut/generate.hpp"
#include "firecut/oracle.hpp"
#include "firecut/rayfree.hpp"
#include "firecut/solver.hpp"
#include "helpers.hpp"

using namespace firecut;
using namespace fc_test;

namespace {

Instance path_abh(std::uint64_t budget) {
  return hub_instance({n("a"), n("b"), n("h")}, {Edge(n("a"), n("b")), Edge(n("b"), n("h"))}, {n("h")},
                      {n("a")}, budget);
}

std::int64_t min_cut(const Instance& inst) {
  SolverOptions opts;
  opts.exact_min_cut = true;
  return *solve(inst, opts).min_cut_value;
}

}  // namespace

TEST_SUITE("rayfree") {

TEST_CASE("hat sets of a path") {
  HatSets h = build_hat_sets(path_abh(1));
  CHECK(h.v_hat == std::vector<Vertex>{n("a"), n("b")});
  CHECK(h.v_hat_inf == std::vector<Vertex>{n("h")});
  CHECK(h.induced_edges.size() == 2);
}

TEST_CASE("hat sets skip other components and hub-hub edges") {
  Instance inst = hub_instance({n("a"), n("b"), n("c"), n("d"), n("h"), n("k")},
                               {Edge(n("a"), n("b")), Edge(n("c"), n("d")), Edge(n("b"), n("h")),
                                Edge(n("h"), n("k")), Edge(n("k"), n("d"))},
                               {n("h"), n("k")}, {n("a")}, 1);
  HatSets h = build_hat_sets(inst);
  CHECK(h.v_hat == std::vector<Vertex>{n("a"), n("b")});
  CHECK(h.v_hat_inf == std::vector<Vertex>{n("h")});
  for (const Edge& e : h.induced_edges) CHECK_FALSE(e == Edge(n("h"), n("k")));
}

TEST_CASE("hat set is the ignited tree only") {
  // hub h with three finite trees hanging off it
  Instance inst = hub_instance(
      {n("h"), n("t1"), n("t1a"), n("t2"), n("t2a"), n("t2b"), n("t3")},
      {Edge(n("h"), n("t1")), Edge(n("t1"), n("t1a")), Edge(n("h"), n("t2")), Edge(n("t2"), n("t2a")),
       Edge(n("t2"), n("t2b")), Edge(n("h"), n("t3"))},
      {n("h")}, {n("t2a")}, 1);
  HatSets h = build_hat_sets(inst);
  CHECK(h.v_hat == std::vector<Vertex>{n("t2"), n("t2a"), n("t2b")});
  CHECK(h.v_hat_inf == std::vector<Vertex>{n("h")});
}

TEST_CASE("network sizes and cut values") {
  Instance p = path_abh(1);
  RayfreeNetwork net = build_network_rayfree(build_hat_sets(p), p);
  CHECK(net.network.node_count() == 5);
  CHECK(max_flow(net.network).value == 1);
  CHECK(min_cut(hub_instance({n("a"), n("h1"), n("h2")}, {Edge(n("a"), n("h1")), Edge(n("a"), n("h2"))},
                             {n("h1"), n("h2")}, {n("a")}, 0)) == 2);
  CHECK(min_cut(hub_instance({n("a"), n("b"), n("h")}, {Edge(n("a"), n("b"))}, {n("h")}, {n("a")}, 0)) == 0);
}

TEST_CASE("solve_rayfree") {
  Verdict v = solve(path_abh(1));
  CHECK(v.contained);
  REQUIRE(v.cut);
  CHECK(v.cut->size() == 1);
  CHECK(verify_cut(path_abh(1), *v.cut));
  CHECK_FALSE(solve(path_abh(0)).contained);

  Instance three = hub_instance({n("a"), n("h1"), n("h2"), n("h3")},
                                {Edge(n("a"), n("h1")), Edge(n("a"), n("h2")), Edge(n("a"), n("h3"))},
                                {n("h1"), n("h2"), n("h3")}, {n("a")}, 2);
  CHECK_FALSE(solve(three).contained);
  three.budget = 3;
  CHECK(solve(three).contained);

  Instance none = path_abh(0);
  none.ignitions.clear();
  Verdict e = solve(none);
  CHECK(e.contained);
  CHECK(e.cut->empty());
}

TEST_CASE("hub ignition is never contained") {
  Instance inst = path_abh(5);
  inst.ignitions = {n("h")};
  Verdict v = solve(inst);
  CHECK_FALSE(v.contained);
  CHECK(v.reason == "infinite-degree ignition");
}

TEST_CASE("removed vertices break paths to hubs") {
  Instance inst = path_abh(0);
  inst.removed = {n("b")};
  CHECK(solve(inst).contained);
}

TEST_CASE("random hub graphs agree with exhaustive search") {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    HubGenParams p;
    p.explicit_size = static_cast<std::uint32_t>(rng.between(2, 9));
    p.hubs = static_cast<std::uint32_t>(rng.between(0, p.explicit_size - 1));
    p.budget = static_cast<std::uint64_t>(rng.between(0, 3));
    Instance inst = generate_hub(p, rng.below(1'000'000));
    Verdict v = solve(inst);
    CHECK(v.contained == oracle::brute_force_rayfree(inst).contained);
    if (v.contained) CHECK(verify_cut(inst, *v.cut));
  }
}

}
