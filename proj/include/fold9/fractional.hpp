#pragma once

#include <vector>

#include "fold9/color_set.hpp"
#include "fold9/graph.hpp"
#include "fold9/rational.hpp"

namespace fold9 {

/// Sorted vertex ids.
using VertexSet = std::vector<Vertex>;

inline constexpr int kDefaultLpCap = 20;

/// Inclusion-maximal independent sets, each sorted, the family sorted.
/// Throws TooLarge when g has more than `cap` vertices.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, int cap = kDefaultLpCap);

/// Every nonempty independent set. Throws TooLarge above `cap` vertices.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int cap = 12);

struct WeightedSet {
  VertexSet set;
  Rational weight;
};

/// Independent sets with nonnegative weights. Entries may repeat a set.
struct WeightFunction {
  std::vector<WeightedSet> entries;

  Rational total() const;
  /// Total weight of the entries containing each vertex.
  std::vector<Rational> coverage(int vertex_count) const;
  /// Every set independent, every weight >= 0, every vertex covered >= 1.
  bool is_fractional_coloring(const Graph& g) const;
};

struct FractionalSolution {
  Rational value;
  WeightFunction weights;  ///< an optimal covering, zero weights omitted
};

/// min Σ w(S) over the given independent sets subject to coverage >= 1 at
/// every vertex, in exact arithmetic. The family must cover every vertex.
FractionalSolution solve_covering_lp(const Graph& g, const std::vector<VertexSet>& family);

/// χ_f over the maximal independent sets. Throws TooLarge above `cap`.
FractionalSolution chi_f_solve(const Graph& g, int cap = kDefaultLpCap);
Rational chi_f_exact(const Graph& g, int cap = kDefaultLpCap);

/// Weight 1/fold on each of the nonempty color classes. Throws NotAColoring
/// unless `c` is a proper coloring of g.
WeightFunction coloring_to_weights(const Graph& g, const FoldColoring& c);

/// Independence number by exhaustive search over maximal sets.
int independence_number(const Graph& g, int cap = kDefaultLpCap);

}  // namespace fold9
