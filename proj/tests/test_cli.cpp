#include <doctest.h>

#include "firecut/generate.hpp"
#include "firecut/io.hpp"
#include "firecut/render.hpp"
#include "firecut/solver.hpp"
#include "helpers.hpp"

using namespace firecut;
using namespace fc_test;

TEST_SUITE("cli") {

TEST_CASE("generators are deterministic") {
  GridGenParams gp;
  gp.ignitions = 2;
  gp.budget = 6;
  CHECK(instance_to_json(generate_grid(gp, 7)).dump() == instance_to_json(generate_grid(gp, 7)).dump());
  Instance a = generate_grid(gp, 7);
  CHECK(a.ignitions.size() == 2);
  CHECK(a.budget == 6);
  HubGenParams hp;
  hp.explicit_size = 8;
  hp.hubs = 2;
  Instance h = generate_hub(hp, 3);
  CHECK(std::get<HubGraph>(h.graph->family()).hubs.size() == 2);
  CHECK(instance_to_json(generate_hub(hp, 3)) == instance_to_json(h));
  CHECK(to_dimacs(generate_3cnf(5, 9, 1)) == to_dimacs(generate_3cnf(5, 9, 1)));
  Rng r1(1), r2(1);
  for (int k = 0; k < 100; ++k) CHECK(r1.below(17) == r2.below(17));
}

TEST_CASE("domino generator") {
  PolyominoGenParams pp;
  pp.tile_size = 2;
  Instance d = generate_polyomino(pp, 1);
  const auto& t = std::get<PolyominoGrid>(d.graph->family()).tiling;
  CHECK(t.max_tile_size() == 2);
  CHECK(t.tiles().size() == 1);
  CHECK(t.tiles()[0].size() == 2);
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("generated instances parse back") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GridGenParams gp;
    gp.ignitions = 3;
    gp.removed = 4;
    Instance a = generate_grid(gp, seed);
    Instance b = parse_instance_text(instance_to_json(a).dump());
    CHECK(instance_to_json(b) == instance_to_json(a));
  }
}

TEST_CASE("unit polyomino copy") {
  Instance a = grid_instance({g(0, 0), g(1, 0)}, {g(2, 2)}, 6);
  Instance b = as_unit_polyomino(a);
  CHECK(b.ignitions == std::vector<Vertex>{Vertex::poly(0, 0, 0), Vertex::poly(1, 0, 0)});
  CHECK(solve(b).contained == solve(a).contained);
}

TEST_CASE("grid picture") {
  Instance inst = grid_instance({g(0, 0)}, {g(1, 1)}, 4);
  Verdict v = solve(inst);
  auto pic = render_grid(inst, v);
  REQUIRE(pic);
  CHECK(pic->find('F') != std::string::npos);
  CHECK(pic->find('X') != std::string::npos);
  const std::string body = pic->substr(0, pic->find("i from"));
  CHECK(std::count(body.begin(), body.end(), '|') == 2);
  CHECK(std::count(body.begin(), body.end(), '-') == 2);
  Instance hub = hub_instance({n("a")}, {}, {}, {n("a")}, 0);
  CHECK_FALSE(render_grid(hub, solve(hub)));
}

}
