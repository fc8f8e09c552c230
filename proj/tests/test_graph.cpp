#include <algorithm>
#include <set>

#include "doctest.h"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"
#include "fold9/graph.hpp"

using namespace fold9;

namespace {

bool raises(Errc code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::set<std::vector<Vertex>> face_triangles(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  for (const Face& f : faces(g)) {
    auto b = f.boundary;
    std::sort(b.begin(), b.end());
    out.insert(b);
  }
  return out;
}

// Reference separator test: BFS on the remaining vertices.
bool separates(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : removed) gone[v] = 1;
  Vertex start = -1;
  int left = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) {
      ++left;
      if (start < 0) start = v;
    }
  if (left < 2) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached < left;
}

}  // namespace

TEST_CASE("from_edge_list builds simple graphs") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  const Graph c5 = cycle_graph(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  const Graph ico = icosahedron();
  CHECK(ico.edge_count() == 30);
  CHECK(ico.min_degree() == 5);
  CHECK(ico.max_degree() == 5);

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph::from_edge_list(2, dup).edge_count() == 1);

  CHECK(raises(Errc::IndexOutOfRange, [] { Graph::from_edge_list(2, std::vector<Edge>{{0, 2}}); }));
  CHECK(raises(Errc::IndexOutOfRange, [] { Graph::from_edge_list(2, std::vector<Edge>{{1, 1}}); }));
}

TEST_CASE("embedding satisfies Euler") {
  CHECK(faces(compute_embedding(complete_graph(4))).size() == 4);
  CHECK(faces(icosahedron()).size() == 20);
  CHECK(raises(Errc::NonPlanar, [] { compute_embedding(complete_graph(5)); }));
  CHECK(!is_planar(complete_graph(5)));
  CHECK(!is_planar(Graph::from_edge_list(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                                              {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
  CHECK(raises(Errc::MissingEmbedding, [] { faces(complete_graph(4)); }));
}

TEST_CASE("faces of small embedded graphs") {
  const auto oct = faces(octahedron());
  CHECK(oct.size() == 8);
  for (const Face& f : oct) CHECK(f.length() == 3);

  const auto c5 = faces(compute_embedding(cycle_graph(5)));
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].length() == 5);
  CHECK(c5[1].length() == 5);

  for (const Face& f : faces(icosahedron())) CHECK(f.length() == 3);
}

TEST_CASE("every directed edge lies on exactly one face") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = compute_embedding(gen_sparse_planar(seed, 30, 40));
    std::set<std::pair<Vertex, Vertex>> darts;
    std::size_t total = 0;
    for (const Face& f : faces(g)) {
      for (std::size_t i = 0; i < f.length(); ++i) {
        darts.insert({f.boundary[i], f.boundary[(i + 1) % f.length()]});
        ++total;
      }
    }
    CHECK(total == 2 * g.edge_count());
    CHECK(darts.size() == total);
    // connected: V - E + F = 2
    CHECK(static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
              static_cast<long>(faces(g).size()) ==
          2);
  }
}

TEST_CASE("degree sum and Euler on generated corpus") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 20 + static_cast<int>(seed) * 3});
    long degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * static_cast<long>(g.edge_count()));
    CHECK(g.vertex_count() - static_cast<long>(g.edge_count()) + static_cast<long>(faces(g).size()) == 2);
  }
}

TEST_CASE("contract") {
  SUBCASE("identity") {
    const Graph g = icosahedron();
    auto [h, map] = contract(g, {}, {});
    CHECK(h == g);
    CHECK(map == VertexMap::identity(12));
  }
  SUBCASE("C5 merge and delete gives a triangle") {
    auto [h, map] = contract(cycle_graph(5), {{0, 2}}, {1});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);
    CHECK(map(0) == map(2));
    CHECK(!map.survives(1));
    CHECK(h.adjacent(map(0), map(3)));
    CHECK(h.adjacent(map(0), map(4)));
    CHECK(h.adjacent(map(3), map(4)));
  }
  SUBCASE("K4 minus an edge collapses to a triangle") {
    const Graph g = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    auto [h, map] = contract(g, {{1, 3}}, {});
    CHECK(h == complete_graph(3));
    CHECK(map(1) == map(3));
  }
  SUBCASE("adjacent members are refused") {
    CHECK(raises(Errc::AdjacentGroupMembers, [] { contract(cycle_graph(5), {{0, 1}}, {}); }));
  }
  SUBCASE("vertex count formula") {
    const Graph g = icosahedron().without_rotation();
    auto [h, map] = contract(g, {{1, 3}, {7, 10}}, {0});
    CHECK(h.vertex_count() == 12 - 1 - 2);
    CHECK(map.target_count() == h.vertex_count());
  }
}

TEST_CASE("contraction commutes with composing maps") {
  const Graph g = gen_triangulation({.seed = 4, .n = 30}).without_rotation();
  // First plan: delete v1 and merge two of its non-adjacent neighbors.
  auto plan_at = [](const Graph& h, Vertex v, auto&& usable) {
    auto nb = h.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!h.adjacent(nb[i], nb[j]) && usable(nb[i]) && usable(nb[j]))
          return std::vector<Vertex>{nb[i], nb[j]};
    return std::vector<Vertex>{};
  };
  const Vertex v1 = 0;
  const auto group1 = plan_at(g, v1, [](Vertex) { return true; });
  REQUIRE(group1.size() == 2);
  auto [h1, m1] = contract(g, {group1}, {v1});

  // Second plan touches only vertices that h1 inherited unchanged.
  std::vector<std::vector<Vertex>> preimage(h1.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (m1.survives(x)) preimage[m1(x)].push_back(x);
  auto plain = [&](Vertex y) { return preimage[y].size() == 1 && !g.adjacent(preimage[y][0], v1); };
  Vertex v2 = -1;
  std::vector<Vertex> group2;
  for (Vertex y = 0; y < h1.vertex_count() && v2 < 0; ++y) {
    if (!plain(y)) continue;
    group2 = plan_at(h1, y, plain);
    if (!group2.empty()) v2 = y;
  }
  REQUIRE(v2 >= 0);
  auto [h2, m2] = contract(h1, {group2}, {v2});

  std::vector<Vertex> original2{preimage[group2[0]][0], preimage[group2[1]][0]};
  std::sort(original2.begin(), original2.end());
  auto [direct, md] = contract(g, {group1, original2}, {v1, preimage[v2][0]});
  CHECK(direct == h2);
  CHECK(m1.then(m2) == md);
}

TEST_CASE("find_separating_clique") {
  SUBCASE("two K4 sharing a triangle") {
    const Graph g = Graph::from_edge_list(
        5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    auto x = find_separating_clique(g, 4);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("octahedron has none") { CHECK(!find_separating_clique(octahedron(), 4).has_value()); }
  SUBCASE("bowtie cut vertex") {
    const Graph g =
        Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto x = find_separating_clique(g, 4);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Vertex>{2});
  }
  SUBCASE("agrees with exhaustive search") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Graph g = gen_random_planar(seed, 9, 70);
      if (!is_connected(g)) continue;
      bool exists = false;
      const int n = g.vertex_count();
      for (unsigned mask = 1; mask < (1u << n) && !exists; ++mask) {
        if (std::popcount(mask) > 4) continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j) clique = clique && g.adjacent(s[i], s[j]);
        exists = clique && separates(g, s);
      }
      const auto found = find_separating_clique(g, 4);
      CHECK(found.has_value() == exists);
      if (found) CHECK(separates(g, *found));
    }
  }
}

TEST_CASE("triangulation without separating triangles has only facial triangles") {
  for (int n : {12, 14}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = gen_triangulation({.seed = seed, .n = n});
      if (find_separating_clique(g, 3)) continue;
      const auto facial = face_triangles(g);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c)
            if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
              CHECK(facial.count({a, b, c}) == 1);
    }
  }
}

TEST_CASE("VertexMap composition") {
  const VertexMap a({1, VertexMap::kDeleted, 0, 1}, 2);
  const VertexMap b({VertexMap::kDeleted, 0}, 1);
  const VertexMap c = a.then(b);
  CHECK(c.target_count() == 1);
  CHECK(c.survives(0));
  CHECK(c(0) == 0);
  CHECK(!c.survives(1));
  CHECK(!c.survives(2));
  CHECK(c(3) == 0);
}

TEST_CASE("components and induced subgraphs") {
  const Graph g = Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
  const auto parts = connected_components(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<Vertex>{0, 1});
  CHECK(parts[1] == std::vector<Vertex>{2, 3, 4});
  CHECK(parts[2] == std::vector<Vertex>{5});
  const std::vector<Vertex> pick{2, 3, 4};
  const Graph sub = induced_subgraph(g, pick);
  CHECK(sub.edge_count() == 2);
  CHECK(sub.adjacent(0, 1));
  CHECK(!sub.has_rotation());
}
