#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fold9/graph.hpp"

namespace fold9 {

/// The reducible patterns the reducer knows how to shrink.
///
/// The L-kinds are the degree patterns forbidden in a minimal
/// counterexample: a 5-vertex with a 5-neighbor and a non-adjacent
/// 6⁻-neighbor (L3), a 6-vertex with two non-adjacent 6⁻-neighbors at link
/// distance 3 or 2 (L4 across / offset), and a 7-vertex with a 5-neighbor and
/// two further 6⁻-neighbors, all pairwise non-adjacent (L5).
enum class ConfigKind {
  SepClique,
  Deg3,
  Deg4,
  L3_five_five,
  L3_five_six,
  L4_across,
  L4_offset,
  L5,
};

std::string_view to_string(ConfigKind kind);

struct Configuration {
  ConfigKind kind = ConfigKind::SepClique;
  Vertex center = -1;
  std::vector<Vertex> leaves;    ///< uncolored together with the center
  std::vector<int> degrees;      ///< degree of each leaf
  std::vector<Vertex> boundary;  ///< cyclic walk around the deleted region
  std::vector<Vertex> clique;    ///< only for SepClique

  /// {center} ∪ leaves, center first.
  std::vector<Vertex> uncolored() const;
};

/// Walk around the face that replaces `deleted` once it is removed from the
/// embedded graph `g`. When the removal leaves several new faces (holes),
/// the longest one is returned.
std::vector<Vertex> boundary_walk(const Graph& g, std::span<const Vertex> deleted);

/// L3/L4/L5 configurations centered at `v`, in search order.
std::vector<Configuration> configurations_at(const Graph& g, Vertex v);

/// Every L3/L4/L5 configuration of `g`: all L3 first, then L4, then L5; within
/// a kind by center id and then by leaf ids.
std::vector<Configuration> find_all_configurations(const Graph& g);

/// First configuration in the order of find_all_configurations. `g` must be
/// an embedded triangulation with minimum degree 5 (PreconditionViolation
/// otherwise). Throws NotFound when none exists, which the discharging
/// argument rules out for triangulations without separating triangles.
Configuration find_configuration(const Graph& g);

/// Structural check of a configuration against `g`: leaves adjacent to the
/// center, pairwise non-adjacent, and the kind's degree pattern.
bool is_valid_configuration(const Graph& g, const Configuration& cfg);

/// Position distance of two neighbors of `v` around its rotation (0..d/2).
int link_distance(const Graph& g, Vertex v, Vertex a, Vertex b);

}  // namespace fold9
