#include <set>

#include "doctest.h"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"
#include "fold9/triangulate.hpp"

using namespace fold9;

namespace {

void check_result(const Graph& input, const TriangulationResult& r) {
  const int n = input.vertex_count();
  CHECK(is_triangulation(r.graph));
  CHECK(r.graph.edge_count() == 3 * static_cast<std::size_t>(n) - 6);
  CHECK(faces(r.graph).size() == 2 * static_cast<std::size_t>(n) - 4);
  CHECK(r.graph.edge_count() == input.edge_count() + r.added_edges.size());
  std::set<Edge> added(r.added_edges.begin(), r.added_edges.end());
  CHECK(added.size() == r.added_edges.size());
  for (auto [u, v] : input.edges()) CHECK(r.graph.adjacent(u, v));
  for (auto [u, v] : r.added_edges) {
    CHECK(!input.adjacent(u, v));
    CHECK(r.graph.adjacent(u, v));
  }
}

}  // namespace

TEST_CASE("small cases") {
  const Graph k4 = compute_embedding(complete_graph(4));
  auto r = triangulate(k4);
  CHECK(r.added_edges.empty());
  check_result(k4, r);

  const Graph c5 = compute_embedding(cycle_graph(5));
  r = triangulate(c5);
  CHECK(r.graph.edge_count() == 9);
  CHECK(r.added_edges.size() == 4);
  check_result(c5, r);

  const Graph c4 = compute_embedding(cycle_graph(4));
  r = triangulate(c4);
  CHECK(r.added_edges.size() == 2);
  CHECK(r.graph.without_rotation() == complete_graph(4));

  const Graph p3 = compute_embedding(path_graph(3));
  r = triangulate(p3);
  CHECK(r.graph.without_rotation() == complete_graph(3));
  CHECK(r.added_edges == std::vector<Edge>{{0, 2}});
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(triangulate(compute_embedding(path_graph(2))), Error);
  try {
    triangulate(compute_embedding(path_graph(2)));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooSmall);
  }
  try {
    triangulate(cycle_graph(5));
    FAIL("expected MissingEmbedding");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingEmbedding);
  }
}

TEST_CASE("is_triangulation") {
  CHECK(is_triangulation(icosahedron()));
  CHECK(is_triangulation(octahedron()));
  CHECK(!is_triangulation(compute_embedding(cycle_graph(5))));
}

TEST_CASE("trees, sparse graphs and cut vertices triangulate") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 37);
    for (const Graph& g : {gen_sparse_planar(seed, n, 0), gen_sparse_planar(seed, n, 60),
                           gen_with_cut_vertices(seed, n)}) {
      REQUIRE(is_connected(g));
      const Graph embedded = compute_embedding(g);
      check_result(embedded, triangulate(embedded));
    }
  }
}

TEST_CASE("star and path with repeated boundary vertices") {
  const Graph star = compute_embedding(Graph::from_edge_list(
      7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}));
  check_result(star, triangulate(star));
  const Graph path = compute_embedding(path_graph(9));
  check_result(path, triangulate(path));
}
