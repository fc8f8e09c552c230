#pragma once

#include <vector>

#include "fold9/configuration.hpp"
#include "fold9/graph.hpp"

namespace fold9 {

/// Which boundary vertices to identify before recoloring a smaller graph.
///
/// After the reduced graph is colored and the coloring pulled back, every
/// uncolored vertex w sees at most budget[w] distinct colored classes, each
/// class holding 2 colors. With 9 colors that leaves the center at least
/// 9 - 2*2 = 5 colors and each leaf at least 9 - 2*3 = 3.
struct IdentificationPlan {
  std::vector<Vertex> deleted;              ///< center first, then leaves
  std::vector<std::vector<Vertex>> groups;  ///< each of size >= 2, sorted
  std::vector<int> budget;                  ///< parallel to `deleted`
};

/// Finds the identification plan with the fewest merges. The search runs
/// over partitions of the boundary vertices into independent blocks that do
/// not cross along the boundary walk, checks every uncolored vertex against
/// its budget and accepts the first plan whose reduced graph is planar.
/// Throws PlanNotFound when no such plan exists (always for Deg3 and
/// SepClique).
IdentificationPlan plan_identifications(const Configuration& cfg, const Graph& g);

/// Distinct post-identification classes among the colored neighbors of
/// `w`, one of plan.deleted.
int class_count(const Graph& g, const IdentificationPlan& plan, Vertex w);

/// Budgets, independence and disjointness; non-crossing is checked against
/// `boundary` when it is a simple cycle.
bool plan_is_valid(const Graph& g, const IdentificationPlan& plan,
                   const std::vector<Vertex>& boundary);

/// Groups never interleave along the cyclic order `walk` (a, c in one group
/// and b, d in another with a < b < c < d is forbidden).
bool groups_non_crossing(const std::vector<Vertex>& walk,
                         const std::vector<std::vector<Vertex>>& groups);

}  // namespace fold9
