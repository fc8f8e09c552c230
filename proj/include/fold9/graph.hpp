#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fold9 {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with an optional rotation
/// system. Neighbor lists are kept sorted; the rotation (when present) gives
/// the clockwise cyclic order of neighbors around each vertex.
///
/// Values are immutable once built. Operations that change the graph return
/// a new one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Collapses duplicate edges. Throws IndexOutOfRange on a bad id or a loop.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  /// Builds an embedded graph from its rotation system. The rotation must be
  /// symmetric (w in rot[v] iff v in rot[w]) and free of repeats.
  static Graph from_rotation(std::vector<std::vector<Vertex>> rotation);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_rotation() const noexcept { return !rotation_.empty() || adj_.empty(); }
  std::span<const Vertex> rotation(Vertex v) const;

  /// Neighbor that follows `u` in the rotation around `v`.
  Vertex rotation_successor(Vertex v, Vertex u) const;
  Vertex rotation_predecessor(Vertex v, Vertex u) const;

  Graph without_rotation() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.rotation_ == b.rotation_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> rotation_;
  std::size_t edge_count_ = 0;
};

/// A face of an embedded graph, as the cyclic walk of vertices met while
/// tracing it. Vertices may repeat when the graph is not 2-connected.
struct Face {
  std::vector<Vertex> boundary;

  std::size_t length() const noexcept { return boundary.size(); }
};

/// Maps the vertices of a graph onto the vertices of a graph derived from it
/// by deletion and identification. Deleted vertices map to kDeleted.
class VertexMap {
 public:
  static constexpr Vertex kDeleted = -1;

  VertexMap() = default;
  VertexMap(std::vector<Vertex> image, int target_count);

  static VertexMap identity(int n);

  int source_count() const noexcept { return static_cast<int>(image_.size()); }
  int target_count() const noexcept { return target_count_; }
  bool survives(Vertex v) const { return image_.at(v) != kDeleted; }
  Vertex operator()(Vertex v) const { return image_.at(v); }

  /// (second ∘ this): first apply this map, then `second`.
  VertexMap then(const VertexMap& second) const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> image_;
  int target_count_ = 0;
};

/// Planar embedding of `g` (Boyer–Myrvold). Throws NonPlanar.
Graph compute_embedding(const Graph& g);
bool is_planar(const Graph& g);

/// Traces every face of an embedded graph. Each directed edge is used by
/// exactly one face. Isolated vertices contribute no face.
std::vector<Face> faces(const Graph& g);

/// Deletes `deleted`, identifies each group to a single vertex and merges
/// parallel edges. Groups must be pairwise disjoint, disjoint from `deleted`
/// and independent in `g`. New ids follow the smallest surviving original id
/// of each class. When `g` is embedded the result is re-embedded from
/// scratch (NonPlanar if the identifications destroy planarity).
std::pair<Graph, VertexMap> contract(const Graph& g,
                                     const std::vector<std::vector<Vertex>>& groups,
                                     const std::vector<Vertex>& deleted);

/// A clique X with |X| <= max_size such that g - X is disconnected, searched
/// by increasing size and then lexicographically.
std::optional<std::vector<Vertex>> find_separating_clique(const Graph& g, int max_size);

/// Component id per vertex, numbered in order of smallest member.
std::vector<int> component_ids(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced on `vertices`; new vertex i corresponds to vertices[i].
/// The rotation is dropped.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected after removing `removed`? Vertices of `removed` are ignored.
bool connected_without(const Graph& g, std::span<const Vertex> removed);

}  // namespace fold9
