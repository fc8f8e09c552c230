#include "doctest.h"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"
#include "fold9/homomorphism.hpp"
#include "fold9/list_color.hpp"
#include "fold9/planner.hpp"
#include "fold9/reducer.hpp"

using namespace fold9;

namespace {

// Reference check written against the definition only.
bool proper_2fold_9(const Graph& g, const FoldColoring& c) {
  if (static_cast<int>(c.sets.size()) != g.vertex_count()) return false;
  for (ColorSet s : c.sets)
    if (s.size() != 2 || s.min() < 1 || s.max() > 9) return false;
  for (auto [u, v] : g.edges())
    if ((c.sets[u] & c.sets[v]).size() != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("small named graphs") {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), icosahedron(), octahedron(), petersen_graph().without_rotation(),
                         wagner(), path_graph(1), Graph(0), Graph(3)}) {
    if (!is_planar(g)) continue;
    CHECK(proper_2fold_9(g, color(g)));
    CHECK(proper_2fold_9(g, color(g, {.base_threshold = 4})));
  }
}

TEST_CASE("non-planar input") {
  try {
    color(complete_graph(5));
    FAIL("expected NonPlanar");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPlanar);
  }
  CHECK_THROWS_AS(color(petersen_graph()), Error);
}

TEST_CASE("deterministic output") {
  const Graph g = gen_triangulation({.seed = 9, .n = 50});
  CHECK(color(g) == color(g));
}

TEST_CASE("reductions on the octahedron reach the base case") {
  Reducer r({.base_threshold = 4});
  const FoldColoring c = r.color(octahedron());
  CHECK(proper_2fold_9(octahedron(), c));
  CHECK(r.stats().count(ConfigKind::Deg4) >= 1);
  CHECK(r.stats().base_cases >= 1);
}

TEST_CASE("separating clique splitting") {
  const Graph two_k4 = Graph::from_edge_list(
      5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  Reducer r;
  const FoldColoring c = r.split_on_clique(two_k4, {0, 1, 2});
  CHECK(proper_2fold_9(two_k4, c));

  const Graph bowtie = Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(proper_2fold_9(bowtie, r.split_on_clique(bowtie, {2})));
}

TEST_CASE("aligning permutation maps clique colorings onto each other") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int size = 1 + rng.below(4);
    auto draw = [&] {
      std::vector<ColorSet> sets;
      ColorSet used;
      while (static_cast<int>(sets.size()) < size) {
        ColorSet s;
        while (s.size() < 2) {
          const int c = 1 + rng.below(9);
          if (!used.contains(c)) s.insert(c);
        }
        used |= s;
        sets.push_back(s);
      }
      return sets;
    };
    const auto from = draw();
    const auto to = draw();
    const auto perm = aligning_permutation(from, to, 9);
    ColorSet image;
    for (int c = 1; c <= 9; ++c) image.insert(perm[c]);
    CHECK(image == ColorSet::range(1, 9));
    for (int i = 0; i < size; ++i) CHECK(apply_permutation(from[i], perm) == to[i]);
  }
}

TEST_CASE("every configuration kind reduces correctly") {
  std::array<int, 8> reduced{};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gen_triangulation({.seed = seed, .n = 26, .flips_per_vertex = 6});
    for (const Configuration& cfg : find_all_configurations(g)) {
      Reducer r;
      const FoldColoring c = r.reduce_and_recurse(g, cfg, plan_identifications(cfg, g));
      CHECK(proper_2fold_9(g, c));
      ++reduced[static_cast<int>(cfg.kind)];
    }
  }
  for (ConfigKind k : {ConfigKind::L3_five_five, ConfigKind::L3_five_six, ConfigKind::L4_across,
                       ConfigKind::L4_offset, ConfigKind::L5})
    CHECK_MESSAGE(reduced[static_cast<int>(k)] > 0, to_string(k));
}

TEST_CASE("mixed corpus") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 15 + static_cast<int>(seed) * 7;
    for (const Graph& g : {gen_triangulation({.seed = seed, .n = n}), gen_sparse_planar(seed, n, 40),
                           gen_with_cut_vertices(seed, n), gen_apollonian(seed, n), gen_random_planar(seed, n, 80)}) {
      Reducer r;
      CHECK(proper_2fold_9(g, r.color(g)));
      CHECK(r.stats().max_depth <= g.vertex_count() + 1);
    }
  }
}

TEST_CASE("agrees with direct search on small graphs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Graph g = gen_random_planar(seed, n, static_cast<int>(seed * 37 % 101));
    const FoldColoring c = color(g, {.base_threshold = 4});
    CHECK(proper_2fold_9(g, c));
    CHECK(search_fold_coloring(g).has_value());
  }
}
