#include <doctest.h>

#include "firecut/bounds.hpp"
#include "firecut/errors.hpp"
#include "firecut/explorer.hpp"
#include "helpers.hpp"

using namespace firecut;
using namespace fc_test;

namespace {

std::shared_ptr<const GraphSpec> grid() {
  return std::make_shared<const GraphSpec>(GraphSpec::infinite_grid());
}

std::vector<Edge> star(const Vertex& v) {
  std::vector<Edge> out;
  for (const auto& w : grid()->neighbors(v)) out.emplace_back(v, w);
  return out;
}

}  // namespace

TEST_SUITE("explorer") {

TEST_CASE("ball sizes") {
  OraclePtr o = make_oracle(grid());
  std::vector<Vertex> c{g(0, 0)};
  CHECK(ball(*o, c, 1).members.size() == 5);
  CHECK(ball(*o, c, 2).members.size() == 13);
  OraclePtr r = restrict(grid(), VertexSet{g(0, 1)});
  CHECK(ball(*r, c, 1).members.size() == 4);
  Ball b = ball(*o, c, 3);
  CHECK(b.members.front() == g(0, 0));
  for (const auto& v : b.members) CHECK(b.distance.at(v) <= 3);
  for (const auto& e : b.frontier_edges) CHECK(b.contains(e.first()) != b.contains(e.second()));
  CHECK(b.frontier_edges.size() == 8 * 3 + 4);  // 8K+4 edges leave a diamond of radius K
  CHECK_THROWS_AS(ball(*o, c, 10, 5), LimitError);
}

TEST_CASE("component_bounded") {
  OraclePtr o = make_oracle(grid());
  OraclePtr iso = apply_cut(o, CutSystem::from(star(g(0, 0))));
  auto r = component_bounded(*iso, g(0, 0), 10);
  CHECK(r.finite);
  CHECK(r.members == std::vector<Vertex>{g(0, 0)});
  CHECK(r.escaping_edges.empty());
  CHECK_FALSE(component_bounded(*o, g(0, 0), 10).finite);

  std::vector<Edge> domino;
  for (const auto& e : star(g(0, 0)))
    if (e.other(g(0, 0)) != g(1, 0)) domino.push_back(e);
  for (const auto& e : star(g(1, 0)))
    if (e.other(g(1, 0)) != g(0, 0)) domino.push_back(e);
  CHECK(domino.size() == 6);
  auto d = component_bounded(*apply_cut(o, CutSystem::from(domino)), g(1, 0), 10);
  CHECK(d.finite);
  CHECK(d.members.size() == 2);
}

TEST_CASE("finite_components_near") {
  auto p = bounds_profile(*grid());
  std::vector<Vertex> a{g(0, 0)};
  CHECK(finite_components_near(*restrict(grid(), VertexSet{g(0, 0)}), a, combined_L(p, 4)).empty());

  VertexSet ring;
  for (std::int64_t i = -1; i <= 1; ++i)
    for (std::int64_t j = -1; j <= 1; ++j)
      if (i != 0 || j != 0) ring.insert(g(i, j));
  std::vector<Vertex> anchors(ring.begin(), ring.end());
  auto inside = finite_components_near(*restrict(grid(), ring), anchors, combined_L(p, 32));
  CHECK(inside == std::vector<Vertex>{g(0, 0)});
  CHECK(finite_components_near(*make_oracle(grid()), std::vector<Vertex>{}, 10).empty());
}

}
