#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fold9/configuration.hpp"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"

using namespace fold9;

namespace {

enum Family { kL3, kL4, kL5 };

Family family_of(ConfigKind k) {
  switch (k) {
    case ConfigKind::L3_five_five:
    case ConfigKind::L3_five_six: return kL3;
    case ConfigKind::L4_across:
    case ConfigKind::L4_offset: return kL4;
    default: return kL5;
  }
}

// Straight from the degree definitions, ignoring the embedding.
bool has_pattern(const Graph& g, Vertex v, Family f) {
  const auto nb = g.neighbors(v);
  const int d = g.degree(v);
  auto ok = [&](Vertex a, Vertex b) { return a != b && !g.adjacent(a, b); };
  if (f == kL3 && d == 5) {
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (g.degree(a) == 5 && g.degree(b) <= 6 && ok(a, b)) return true;
  }
  if (f == kL4 && d == 6) {
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (g.degree(a) <= 6 && g.degree(b) <= 6 && ok(a, b)) return true;
  }
  if (f == kL5 && d == 7) {
    for (Vertex a : nb)
      for (Vertex b : nb)
        for (Vertex c : nb)
          if (g.degree(a) == 5 && g.degree(b) <= 6 && g.degree(c) <= 6 && ok(a, b) && ok(a, c) && ok(b, c))
            return true;
  }
  return false;
}

}  // namespace

TEST_CASE("icosahedron yields L3_five_five") {
  const Graph g = icosahedron();
  const Configuration cfg = find_configuration(g);
  CHECK(cfg.kind == ConfigKind::L3_five_five);
  CHECK(cfg.leaves.size() == 2);
  CHECK(is_valid_configuration(g, cfg));
  for (Vertex v = 0; v < 12; ++v) CHECK(!configurations_at(g, v).empty());
}

TEST_CASE("preconditions") {
  try {
    find_configuration(octahedron());
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolation);
  }
  try {
    find_configuration(cycle_graph(5));
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolation);
  }
}

TEST_CASE("detector matches the degree definitions") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 16 + static_cast<int>(seed) * 2, .flips_per_vertex = 6});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::set<Family> found;
      for (const Configuration& cfg : configurations_at(g, v)) {
        CHECK(cfg.center == v);
        CHECK(is_valid_configuration(g, cfg));
        CHECK(!cfg.boundary.empty());
        found.insert(family_of(cfg.kind));
      }
      for (Family f : {kL3, kL4, kL5}) CHECK(found.count(f) == static_cast<std::size_t>(has_pattern(g, v, f)));
    }
  }
}

TEST_CASE("L4 kinds follow link distance") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 40, .flips_per_vertex = 6});
    for (const Configuration& cfg : find_all_configurations(g)) {
      if (cfg.kind == ConfigKind::L4_across) CHECK(link_distance(g, cfg.center, cfg.leaves[0], cfg.leaves[1]) == 3);
      if (cfg.kind == ConfigKind::L4_offset) CHECK(link_distance(g, cfg.center, cfg.leaves[0], cfg.leaves[1]) == 2);
    }
  }
}

TEST_CASE("priority order L3 then L4 then L5") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 30, .flips_per_vertex = 8});
    const auto all = find_all_configurations(g);
    REQUIRE(!all.empty());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(family_of(all[i - 1].kind) <= family_of(all[i].kind));
    CHECK(find_configuration(g).kind == all.front().kind);
  }
}

TEST_CASE("geodesic sphere has L4 but no L3") {
  // Split every icosahedron edge at its midpoint: the 12 old vertices keep
  // degree 5 and are pairwise non-adjacent, the 30 midpoints have degree 6.
  const Graph ico = icosahedron();
  std::map<Edge, Vertex> mid;
  for (auto e : ico.edges()) mid.emplace(e, 12 + static_cast<Vertex>(mid.size()));
  auto m = [&](Vertex a, Vertex b) { return mid.at({std::min(a, b), std::max(a, b)}); };
  std::vector<Edge> edges;
  for (auto [a, b] : ico.edges()) {
    edges.emplace_back(a, m(a, b));
    edges.emplace_back(m(a, b), b);
  }
  for (const Face& f : faces(ico)) {
    const Vertex a = f.boundary[0], b = f.boundary[1], c = f.boundary[2];
    edges.emplace_back(m(a, b), m(b, c));
    edges.emplace_back(m(b, c), m(c, a));
    edges.emplace_back(m(c, a), m(a, b));
  }
  const Graph g = compute_embedding(Graph::from_edge_list(42, edges));
  REQUIRE(g.edge_count() == 120);
  REQUIRE(!find_separating_clique(g, 3));
  const Configuration cfg = find_configuration(g);
  CHECK(family_of(cfg.kind) == kL4);
  CHECK(g.degree(cfg.center) == 6);
  CHECK(is_valid_configuration(g, cfg));
  for (Vertex v = 0; v < 42; ++v) {
    CHECK(!has_pattern(g, v, kL3));
    CHECK(!has_pattern(g, v, kL5));
  }
}

TEST_CASE("boundary walk of a single vertex is its link") {
  const Graph g = icosahedron();
  for (Vertex v = 0; v < 12; ++v) {
    auto walk = boundary_walk(g, std::vector<Vertex>{v});
    auto link = std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(walk.begin(), walk.end());
    CHECK(walk == link);
  }
}
