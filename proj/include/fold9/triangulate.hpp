#pragma once

#include <vector>

#include "fold9/graph.hpp"

namespace fold9 {

struct TriangulationResult {
  Graph graph;               ///< embedded, every face a triangle
  std::vector<Edge> added_edges;
};

/// Completes a connected embedded graph with n >= 3 to a plane
/// triangulation by inserting chords inside faces. The original graph is the
/// result minus `added_edges`, so any coloring of the result restricts to it.
/// Throws TooSmall for n < 3 and MissingEmbedding without a rotation.
TriangulationResult triangulate(const Graph& g);

/// All faces are triangles, the graph is simple and n >= 3.
bool is_triangulation(const Graph& g);

}  // namespace fold9
