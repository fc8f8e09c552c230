#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "fold9/color_set.hpp"
#include "fold9/graph.hpp"

namespace fold9 {

/// K_{n:k}: the k-subsets of {1..n}, adjacent when disjoint. Vertex ids
/// follow the lexicographic order of the sorted subsets.
struct KneserGraph {
  int n = 0;
  int k = 0;
  std::vector<ColorSet> subsets;
  Graph graph;

  /// Id of a k-subset; throws NotAColoring if it is not a vertex.
  Vertex id_of(ColorSet s) const;
};

/// Throws InvalidParams unless n >= k >= 1 and n <= 31.
KneserGraph kneser(int n, int k);

/// Vertex (a, b) of g1 x g2 gets id a * |V(g2)| + b.
Graph categorical_product(const Graph& g1, const Graph& g2);

/// h[v] is the image of v.
using HomMap = std::vector<Vertex>;

/// The coloring read as a map into K_{palette:fold}. Throws NotAColoring
/// when a set has the wrong size or a color outside the palette.
HomMap coloring_to_hom(const FoldColoring& c, const KneserGraph& target);

bool verify_hom(const Graph& g, const HomMap& h, const Graph& target);

/// Whether `c` is a proper fold-coloring of g within its palette.
bool verify_fold_coloring(const Graph& g, const FoldColoring& c);

/// v -> (h1(v), h2(v)) into the product of targets with |V(second)| = n2.
HomMap pair_hom(const HomMap& h1, const HomMap& h2, int n2);

/// Proper vertex coloring check; colors are arbitrary integers.
bool verify_coloring(const Graph& g, const std::vector<int>& colors);

/// Colors (a, b) of g1 x g2 by colors1[a].
std::vector<int> projection_coloring(const std::vector<int>& colors1, int n2);

using Limit = std::optional<std::chrono::milliseconds>;

/// Exact clique number by branch and bound. Throws Timeout past `limit`.
int clique_number(const Graph& g, Limit limit = std::nullopt);

/// A maximum clique, found by the same search.
std::vector<Vertex> maximum_clique(const Graph& g, Limit limit = std::nullopt);

/// Proper coloring with colors 0..k-1 or nullopt. DSATUR branching, new
/// colors opened one at a time, a maximum clique precolored.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k, Limit limit = std::nullopt);

bool k_colorable(const Graph& g, int k, Limit limit = std::nullopt);

/// Exact chromatic number: k_colorable from ω upward.
int chromatic_number(const Graph& g, Limit limit = std::nullopt);

/// The 8-cycle 0..7 plus the chords {i, i+4}.
Graph wagner();

/// Colors i (0-based) become the pair {2i+1, 2i+2}.
FoldColoring lift_to_fold(const std::vector<int>& colors, int palette);

}  // namespace fold9
