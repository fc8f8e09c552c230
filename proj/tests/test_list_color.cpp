#include "doctest.h"
#include "fold9/error.hpp"
#include "fold9/generate.hpp"
#include "fold9/list_color.hpp"

using namespace fold9;

namespace {

bool valid_star(const ListAssignment& lists, const StarColoring& c) {
  if (c.center.size() != 2 || !c.center.subset_of(lists.center)) return false;
  if (c.leaves.size() != lists.leaves.size()) return false;
  for (std::size_t i = 0; i < c.leaves.size(); ++i)
    if (c.leaves[i].size() != 2 || !c.leaves[i].subset_of(lists.leaves[i]) || !c.leaves[i].disjoint(c.center))
      return false;
  return true;
}

ColorSet random_subset(Rng& rng, int size) {
  ColorSet s;
  while (s.size() < size) s.insert(1 + rng.below(9));
  return s;
}

}  // namespace

TEST_CASE("Fact 1 worked examples") {
  SUBCASE("a center color that hits no leaf") {
    const ListAssignment lists{{1, 4, 5, 6, 7}, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
    const StarColoring c = extend_fact1(lists);
    CHECK(c.center == ColorSet{4, 5});
    CHECK(valid_star(lists, c));
  }
  SUBCASE("a center color that hits one leaf") {
    const ListAssignment lists{{1, 2, 3, 4, 5}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}};
    const StarColoring c = extend_fact1(lists);
    CHECK(c.center == ColorSet{1, 5});
    CHECK(c.leaves[2].subset_of({3, 4}));
    CHECK(c.leaves[0].subset_of({2, 3}));
    CHECK(c.leaves[1].subset_of({2, 4}));
    CHECK(valid_star(lists, c));
  }
  SUBCASE("P3") {
    const ListAssignment lists{{1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}}};
    const StarColoring c = extend_fact1(lists);
    CHECK(valid_star(lists, c));
    CHECK(extend_backtracking(star_pattern(2), star_lists(lists), 2).has_value());
  }
  SUBCASE("lists that are too small") {
    CHECK_THROWS_AS(extend_fact1({{1, 2, 3, 4}, {{1, 2, 3}, {4, 5, 6}}}), Error);
    CHECK_THROWS_AS(extend_fact1({{1, 2, 3, 4, 5}, {{1, 2}, {4, 5, 6}}}), Error);
  }
}

TEST_CASE("extend_backtracking") {
  const Graph k2 = complete_graph(2);
  const std::vector<ColorSet> same{{1, 2, 3}, {1, 2, 3}};
  CHECK(!extend_backtracking(k2, same, 2).has_value());

  const std::vector<ColorSet> apart{{1, 2, 3}, {3, 4, 5}};
  const auto found = extend_backtracking(k2, apart, 2);
  REQUIRE(found.has_value());
  CHECK((*found)[0].disjoint((*found)[1]));
  CHECK((*found)[0].subset_of(apart[0]));
  CHECK((*found)[1].subset_of(apart[1]));

  // K4 needs 8 colors for a 2-fold coloring.
  const std::vector<ColorSet> seven(4, ColorSet::range(1, 7));
  const std::vector<ColorSet> eight(4, ColorSet::range(1, 8));
  CHECK(!extend_backtracking(complete_graph(4), seven, 2).has_value());
  CHECK(extend_backtracking(complete_graph(4), eight, 2).has_value());

  // C5 has a 2-fold 5-coloring but no 2-fold 4-coloring.
  const std::vector<ColorSet> five(5, ColorSet::range(1, 5));
  const std::vector<ColorSet> four(5, ColorSet::range(1, 4));
  CHECK(extend_backtracking(cycle_graph(5), five, 2).has_value());
  CHECK(!extend_backtracking(cycle_graph(5), four, 2).has_value());
}

TEST_CASE("Fact 1 agrees with exhaustive search on random lists") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int leaves = 2 + trial % 2;
    ListAssignment lists{random_subset(rng, 5 + rng.below(2)), {}};
    for (int i = 0; i < leaves; ++i) lists.leaves.push_back(random_subset(rng, 3 + rng.below(2)));
    const StarColoring c = extend_fact1(lists);
    CHECK(valid_star(lists, c));
    CHECK(extend_backtracking(star_pattern(leaves), star_lists(lists), 2).has_value());
  }
}

TEST_CASE("tightness lists") {
  const ListAssignment t2s8 = tightness_lists(2, 8);
  CHECK(t2s8.leaves[0] == ColorSet{1, 2});
  CHECK(t2s8.leaves[1] == ColorSet{3, 4});
  CHECK(t2s8.center == ColorSet{1, 2, 3, 4});
  CHECK(!tightness_feasible(2, 8));

  const ListAssignment t2s9 = tightness_lists(2, 9);
  CHECK(t2s9.leaves[0] == ColorSet{1, 2, 3});
  CHECK(t2s9.leaves[1] == ColorSet{3, 4, 5});
  CHECK(t2s9.center == ColorSet::range(1, 5));
  CHECK(tightness_feasible(2, 9));

  const ListAssignment t1s4 = tightness_lists(1, 4);
  CHECK(t1s4.leaves[0] == ColorSet{1});
  CHECK(t1s4.leaves[1] == ColorSet{2});
  CHECK(t1s4.center == ColorSet{1, 2});
  CHECK(!tightness_feasible(1, 4));

  CHECK_THROWS_AS(tightness_lists(2, 6), Error);
}

TEST_CASE("tightness threshold is s/t = 9/2") {
  for (int t = 1; t <= 4; ++t)
    for (int s = 3 * t + 1; s <= 6 * t && s <= ColorSet::kMaxColor; ++s)
      CHECK(tightness_feasible(t, s) == (2 * s >= 9 * t));
}
