#include <algorithm>

#include "doctest.h"
#include "fold9/configuration.hpp"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"
#include "fold9/planner.hpp"

using namespace fold9;

TEST_CASE("non-crossing groups") {
  const std::vector<Vertex> walk{10, 11, 12, 13, 14, 15};
  CHECK(groups_non_crossing(walk, {{10, 12}, {13, 15}}));
  CHECK(groups_non_crossing(walk, {{10, 14}, {11, 13}}));
  CHECK(!groups_non_crossing(walk, {{10, 13}, {11, 14}}));
  CHECK(!groups_non_crossing(walk, {{10, 12, 14}, {11, 15}}));
  CHECK(groups_non_crossing(walk, {{10, 12, 14}}));
}

TEST_CASE("Deg4 plan merges one non-adjacent pair") {
  const Graph g = octahedron();
  Configuration cfg;
  cfg.kind = ConfigKind::Deg4;
  cfg.center = 0;
  cfg.boundary = boundary_walk(g, std::vector<Vertex>{0});
  const IdentificationPlan plan = plan_identifications(cfg, g);
  CHECK(plan.deleted == std::vector<Vertex>{0});
  REQUIRE(plan.groups.size() == 1);
  REQUIRE(plan.groups[0].size() == 2);
  CHECK(!g.adjacent(plan.groups[0][0], plan.groups[0][1]));
  CHECK(g.adjacent(0, plan.groups[0][0]));
  CHECK(class_count(g, plan, 0) == 3);
  CHECK(plan_is_valid(g, plan, cfg.boundary));
}

TEST_CASE("Deg3 has no plan") {
  const Graph g = compute_embedding(complete_graph(4));
  Configuration cfg;
  cfg.kind = ConfigKind::Deg3;
  cfg.center = 0;
  try {
    plan_identifications(cfg, g);
    FAIL("expected PlanNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PlanNotFound);
  }
}

TEST_CASE("L3 on the icosahedron") {
  const Graph g = icosahedron();
  const Configuration cfg = find_configuration(g);
  const IdentificationPlan plan = plan_identifications(cfg, g);
  CHECK(plan.deleted == cfg.uncolored());
  CHECK(plan.budget == std::vector<int>{2, 3, 3});
  CHECK(class_count(g, plan, cfg.center) <= 2);
  for (Vertex u : cfg.leaves) CHECK(class_count(g, plan, u) <= 3);
  CHECK(plan_is_valid(g, plan, cfg.boundary));
  CHECK(groups_non_crossing(cfg.boundary, plan.groups));
}

TEST_CASE("every corpus configuration gets a valid plan") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 24 + static_cast<int>(seed), .flips_per_vertex = 6});
    for (const Configuration& cfg : find_all_configurations(g)) {
      const IdentificationPlan plan = plan_identifications(cfg, g);
      CHECK(plan_is_valid(g, plan, cfg.boundary));
      for (std::size_t i = 0; i < plan.deleted.size(); ++i)
        CHECK(class_count(g, plan, plan.deleted[i]) <= plan.budget[i]);
      for (const auto& grp : plan.groups) {
        CHECK(grp.size() >= 2);
        CHECK(std::is_sorted(grp.begin(), grp.end()));
        for (std::size_t a = 0; a < grp.size(); ++a)
          for (std::size_t b = a + 1; b < grp.size(); ++b) CHECK(!g.adjacent(grp[a], grp[b]));
      }
      auto [reduced, map] = contract(g, plan.groups, plan.deleted);
      CHECK(is_planar(reduced));
      CHECK(reduced.vertex_count() < g.vertex_count());
    }
  }
}
