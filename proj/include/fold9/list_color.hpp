#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fold9/color_set.hpp"
#include "fold9/graph.hpp"

namespace fold9 {

/// Lists on an uncolored star: one center adjacent to every leaf, leaves
/// pairwise non-adjacent. Two leaves is the P3 case, three is K_{1,3}.
struct ListAssignment {
  ColorSet center;
  std::vector<ColorSet> leaves;
};

struct StarColoring {
  ColorSet center;
  std::vector<ColorSet> leaves;
};

/// Constructive 2-fold extension to a star whose center list has >= 5 colors
/// and whose (two or three) leaf lists have >= 3. A center color c shared
/// with at most one leaf exists by counting; the center takes c plus a color
/// that spares that leaf, then each leaf takes two of what remains.
/// Throws InvalidParams when the list sizes are too small.
StarColoring extend_fact1(const ListAssignment& lists);

/// Exhaustive t-fold list coloring of `pattern`: each vertex v receives
/// `fold` colors from lists[v], adjacent vertices disjoint. Returns nullopt
/// iff no such coloring exists.
std::optional<std::vector<ColorSet>> extend_backtracking(const Graph& pattern,
                                                         std::span<const ColorSet> lists, int fold);

/// K_{1,k} with the center as vertex 0.
Graph star_pattern(int leaves);

/// Star lists in pattern order (center first).
std::vector<ColorSet> star_lists(const ListAssignment& lists);

/// Adversarial K_{1,2} lists for a t-fold s-coloring reduction: with
/// a = s - 2t and b = s - 3t, L(u1) = {1..b}, L(u2) = {a-b+1..a},
/// L(v) = {1..a}. Throws InvalidParams unless s > 3t.
ListAssignment tightness_lists(int fold, int palette);

/// Whether the tightness lists admit a t-fold coloring.
bool tightness_feasible(int fold, int palette);

}  // namespace fold9
