#pragma once

#include <cstdint>
#include <random>

#include "fold9/graph.hpp"

namespace fold9 {

/// The single source of randomness for every generator. Draws are reduced
/// with `%`, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, bound); bound must be positive.
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

/// Embedded platonic triangulations.
Graph octahedron();
Graph icosahedron();

/// k-gonal antiprism with an apex over each k-gon: 2k + 2 vertices, the
/// apexes of degree k and every other vertex of degree 5. k = 5 is the
/// icosahedron.
Graph capped_antiprism(int k);

struct TriangulationParams {
  std::uint64_t seed = 1;
  int n = 12;
  int min_degree = 5;
  /// Diagonal flips attempted per vertex after growth.
  int flips_per_vertex = 4;
  /// Reject flips whose new edge closes a non-facial triangle.
  bool avoid_separating_triangles = false;
};

/// Random embedded triangulation with minimum degree >= 5 (for min_degree 5).
/// Grows a capped antiprism by vertex splits inside the link of vertices of
/// degree >= 6, then applies random diagonal flips that keep the degree
/// bound and simplicity. n = 12 yields the icosahedron; there is no such
/// triangulation on 13 vertices (GenerationFailure), nor below 12.
Graph gen_triangulation(const TriangulationParams& params);

/// Stacked triangulation: K4, then repeated insertion of a vertex into a
/// random face. Rich in 3-vertices and separating triangles.
Graph gen_apollonian(std::uint64_t seed, int n);

/// Random planar graph: edges offered in random order, each kept when the
/// graph stays planar, until `edge_percent` of 3n - 6 is reached. Not
/// necessarily connected.
Graph gen_random_planar(std::uint64_t seed, int n, int edge_percent);

/// Connected spanning subgraph of a random triangulation: every edge outside
/// a random spanning tree survives with probability `keep_percent`.
Graph gen_sparse_planar(std::uint64_t seed, int n, int keep_percent);

/// Several random planar blocks glued in a tree at single vertices, so the
/// result has cut vertices. Total vertex count n (>= 4).
Graph gen_with_cut_vertices(std::uint64_t seed, int n);

}  // namespace fold9
