#include <doctest.h>

#include "firecut/errors.hpp"
#include "firecut/flow.hpp"
#include "firecut/generate.hpp"
#include "firecut/solver.hpp"
#include "helpers.hpp"

using namespace firecut;
using namespace fc_test;

namespace {

FlowNetwork random_network(Rng& rng, std::uint32_t nodes, std::uint32_t arcs, std::int64_t max_cap) {
  FlowNetwork net(nodes, 0, nodes - 1);
  for (std::uint32_t k = 0; k < arcs; ++k) {
    const auto a = static_cast<std::uint32_t>(rng.below(nodes));
    auto b = static_cast<std::uint32_t>(rng.below(nodes - 1));
    if (b >= a) ++b;
    net.add_arc(a, b, rng.between(0, max_cap));
  }
  return net;
}

}  // namespace

TEST_SUITE("flow") {

TEST_CASE("single path") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 1);
  net.add_arc(1, 2, 1);
  auto r = max_flow(net);
  CHECK(r.value == 1);
  CHECK(assert_duality(net, r));
}

TEST_CASE("four disjoint paths") {
  FlowNetwork net(6, 0, 1);
  for (std::uint32_t k = 2; k < 6; ++k) {
    net.add_arc(0, k, 1);
    net.add_arc(k, 1, 1);
  }
  auto r = max_flow(net);
  CHECK(r.value == 4);
  CHECK(r.cut_arcs.size() == 4);
  CHECK(r.source_side == std::vector<std::uint32_t>{0});
  CHECK(assert_duality(net, r));
  auto early = max_flow(net, 2);
  CHECK(early.exceeded);
  CHECK(early.value > 2);
}

TEST_CASE("reduction network of one ignition with budget 4") {
  Instance inst = grid_instance({g(0, 0)}, {}, 4);
  ReductionTrace t = build_network(inst);
  auto r = max_flow(t.network);
  CHECK(r.value == 4);
  CHECK(assert_duality(t.network, r));
}

TEST_CASE("duality rejects a wrong value") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 2, 1);
  auto r = max_flow(net);
  CHECK(assert_duality(net, r));
  r.value += 1;
  CHECK_FALSE(assert_duality(net, r));
}

TEST_CASE("random networks agree with brute force and pass duality") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    auto net = random_network(rng, static_cast<std::uint32_t>(rng.between(2, 30)),
                              static_cast<std::uint32_t>(rng.between(0, 60)), 5);
    auto r = max_flow(net);
    CHECK(assert_duality(net, r));
  }
  for (int k = 0; k < 60; ++k) {
    auto net = random_network(rng, static_cast<std::uint32_t>(rng.between(2, 7)),
                              static_cast<std::uint32_t>(rng.between(0, 10)), 4);
    CHECK(max_flow(net).value == brute_min_cut(net));
  }
}

TEST_CASE("undirected edges carry flow both ways") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 2, 1);
  net.add_edge(1, 2, 1);
  net.add_arc(1, 3, 1);
  CHECK(max_flow(net).value == 1);
}

TEST_CASE("construction errors and dimacs") {
  CHECK_THROWS_AS(FlowNetwork(2, 0, 0), Error);
  FlowNetwork net(2, 0, 1);
  CHECK_THROWS_AS(net.add_arc(0, 5, 1), Error);
  net.add_arc(0, 1, 3);
  const std::string d = net.to_dimacs();
  CHECK(d.find("p max 2 1") != std::string::npos);
  CHECK(d.find("a 1 2 3") != std::string::npos);
  CHECK(sentinel_capacity(10) > 10);
  FlowNetwork big(2, 0, 1);
  big.add_arc(0, 1, INT64_MAX);
  big.add_arc(0, 1, INT64_MAX);
  CHECK_THROWS_AS(max_flow(big), LimitError);
}

}
