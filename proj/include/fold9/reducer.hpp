#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fold9/color_set.hpp"
#include "fold9/configuration.hpp"
#include "fold9/graph.hpp"
#include "fold9/planner.hpp"

namespace fold9 {

struct ReducerOptions {
  /// Graphs with at most this many vertices are colored by direct search.
  /// Values below 4 are raised to 4: K4 has no reducible configuration.
  int base_threshold = 12;
};

struct ReductionStats {
  std::array<std::size_t, 8> by_kind{};  ///< indexed by ConfigKind
  std::size_t base_cases = 0;
  std::size_t plan_retries = 0;  ///< configurations skipped for lack of a plan
  int max_depth = 0;

  std::size_t count(ConfigKind kind) const { return by_kind[static_cast<std::size_t>(kind)]; }
};

/// Produces a 2-fold 9-coloring of any planar graph by recursive reduction:
/// split on separating cliques, otherwise delete a reducible configuration,
/// identify boundary vertices, color the smaller graph, pull the coloring
/// back and extend it to the deleted vertices.
///
/// Deterministic: every search walks vertices and neighbors in id order.
class Reducer {
 public:
  static constexpr int kFold = 2;
  static constexpr int kPalette = 9;

  explicit Reducer(ReducerOptions options = {});

  /// Throws NonPlanar for non-planar input and InternalReductionFailure when
  /// a reduction step breaks its own invariants.
  FoldColoring color(const Graph& g);

  /// Colors the pieces g[C_i ∪ X] for the components C_i of g - X and glues
  /// them after permuting colors so the pieces agree on X.
  FoldColoring split_on_clique(const Graph& g, const std::vector<Vertex>& clique);

  /// Contracts by `plan`, colors the reduced graph, pulls the colors back and
  /// extends to the uncolored vertices of `cfg`.
  FoldColoring reduce_and_recurse(const Graph& g, const Configuration& cfg,
                                  const IdentificationPlan& plan);

  const ReductionStats& stats() const noexcept { return stats_; }

 private:
  FoldColoring color_any(const Graph& g);
  FoldColoring color_triangulation(const Graph& tri);

  ReducerOptions options_;
  ReductionStats stats_;
  int depth_ = 0;
};

/// Convenience wrapper around Reducer::color.
FoldColoring color(const Graph& g, ReducerOptions options = {});

/// Direct backtracking search for a 2-fold 9-coloring, most constrained
/// vertex first. Intended for small graphs; nullopt when none exists.
std::optional<FoldColoring> search_fold_coloring(const Graph& g, int fold = 2, int palette = 9);

/// Permutation of 1..palette (index 0 unused) sending each `from` set onto
/// the matching `to` set; both sides must be pairwise disjoint, equal-sized
/// sets. Unused colors keep their relative order.
std::vector<int> aligning_permutation(const std::vector<ColorSet>& from, const std::vector<ColorSet>& to,
                                      int palette);

ColorSet apply_permutation(ColorSet s, const std::vector<int>& perm);

}  // namespace fold9
