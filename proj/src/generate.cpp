#include "fold9/generate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "fold9/error.hpp"
#include "fold9/triangulate.hpp"

namespace fold9 {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidParams, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edge_list(10, edges);
}

Graph octahedron() {
  // antipodal pairs (0,3), (1,4), (2,5) are the non-edges
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v - u != 3) edges.emplace_back(u, v);
  return compute_embedding(Graph::from_edge_list(6, edges));
}

Graph capped_antiprism(int k) {
  if (k < 3) throw Error(Errc::InvalidParams, "antiprism needs k >= 3");
  const int top = 0;
  const int bottom = 2 * k + 1;
  auto a = [k](int i) { return 1 + (i % k); };
  auto b = [k](int i) { return 1 + k + (i % k); };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(top, a(i));
    edges.emplace_back(bottom, b(i));
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(a(i), b(i + 1));
  }
  return compute_embedding(Graph::from_edge_list(2 * k + 2, edges));
}

Graph icosahedron() { return capped_antiprism(5); }

namespace {

/// Edge set that is cheap to edit; re-embedded after every move (plane
/// triangulations have a unique embedding up to reflection).
class MutableTriangulation {
 public:
  explicit MutableTriangulation(const Graph& g) : graph_(g) {}

  const Graph& graph() const { return graph_; }

  void replace(const std::vector<Edge>& removed, const std::vector<Edge>& added, int extra_vertices) {
    std::set<Edge> edges;
    for (auto e : graph_.edges()) edges.insert(e);
    for (auto [u, v] : removed) edges.erase({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : added) edges.insert({std::min(u, v), std::max(u, v)});
    std::vector<Edge> list(edges.begin(), edges.end());
    graph_ = compute_embedding(Graph::from_edge_list(graph_.vertex_count() + extra_vertices, list));
  }

 private:
  Graph graph_;
};

bool try_split(MutableTriangulation& t, Rng& rng, int min_degree) {
  const Graph& g = t.graph();
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2 * min_degree - 4 && g.degree(v) >= 4) candidates.push_back(v);
  if (candidates.empty()) return false;
  const Vertex w = candidates[rng.below(static_cast<int>(candidates.size()))];
  auto rot = g.rotation(w);
  const int d = static_cast<int>(rot.size());
  // w' takes an arc of k consecutive neighbors: deg(w') = k + 1 and
  // deg(w) = d - k + 3, both must stay >= min_degree.
  const int lo = std::max(min_degree - 1, 2);
  const int hi = std::min(d + 3 - min_degree, d - 1);
  if (lo > hi) return false;
  const int k = lo + rng.below(hi - lo + 1);
  const int start = rng.below(d);
  const Vertex fresh = g.vertex_count();
  std::vector<Edge> removed, added;
  for (int i = 0; i < k; ++i) {
    const Vertex x = rot[(start + i) % d];
    added.emplace_back(fresh, x);
    if (i != 0 && i != k - 1) removed.emplace_back(w, x);
  }
  added.emplace_back(fresh, w);
  t.replace(removed, added, 1);
  return true;
}

bool try_flip(MutableTriangulation& t, Rng& rng, int min_degree, bool avoid_separating) {
  const Graph& g = t.graph();
  const auto edges = g.edges();
  auto [x, y] = edges[rng.below(static_cast<int>(edges.size()))];
  if (g.degree(x) <= min_degree || g.degree(y) <= min_degree) return false;
  const Vertex p = g.rotation_successor(y, x);
  const Vertex q = g.rotation_successor(x, y);
  if (p == q || g.adjacent(p, q)) return false;
  if (avoid_separating) {
    for (Vertex z : g.neighbors(p))
      if (z != x && z != y && g.adjacent(z, q)) return false;
  }
  t.replace({{x, y}}, {{p, q}}, 0);
  return true;
}

}  // namespace

Graph gen_triangulation(const TriangulationParams& params) {
  const int n = params.n;
  if (params.min_degree > 5 || params.min_degree < 3)
    throw Error(Errc::InvalidParams, "min_degree must be in 3..5");
  if (n < 12 || n == 13)
    throw Error(Errc::GenerationFailure,
                "no triangulation with minimum degree 5 on " + std::to_string(n) + " vertices");
  Rng rng(params.seed);
  MutableTriangulation t(n == 12 ? icosahedron() : capped_antiprism(6));

  int budget = 50 * n;
  while (t.graph().vertex_count() < n) {
    if (--budget < 0) throw Error(Errc::GenerationFailure, "vertex splitting stalled");
    try_split(t, rng, params.min_degree);
  }
  const int attempts = params.flips_per_vertex * n;
  for (int i = 0; i < attempts; ++i) try_flip(t, rng, params.min_degree, params.avoid_separating_triangles);

  const Graph& g = t.graph();
  if (!is_triangulation(g) || g.min_degree() < params.min_degree ||
      g.edge_count() != 3 * static_cast<std::size_t>(n) - 6)
    throw Error(Errc::GenerationFailure, "generated graph violates its invariants");
  return g;
}

Graph gen_apollonian(std::uint64_t seed, int n) {
  if (n < 4) throw Error(Errc::InvalidParams, "stacked triangulation needs n >= 4");
  Rng rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<Vertex, 3>> face_list{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (Vertex x = 4; x < n; ++x) {
    const int pick = rng.below(static_cast<int>(face_list.size()));
    const auto [a, b, c] = face_list[pick];
    edges.insert(edges.end(), {{a, x}, {b, x}, {c, x}});
    face_list[pick] = {a, b, x};
    face_list.push_back({b, c, x});
    face_list.push_back({a, c, x});
  }
  return compute_embedding(Graph::from_edge_list(n, edges));
}

Graph gen_random_planar(std::uint64_t seed, int n, int edge_percent) {
  if (n < 0) throw Error(Errc::InvalidParams, "negative vertex count");
  Rng rng(seed);
  std::vector<Edge> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
  for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i) std::swap(pool[i], pool[rng.below(i + 1)]);
  const std::size_t max_edges = n >= 3 ? 3 * static_cast<std::size_t>(n) - 6 : static_cast<std::size_t>(n > 1);
  const std::size_t target = max_edges * static_cast<std::size_t>(std::clamp(edge_percent, 0, 100)) / 100;
  std::vector<Edge> kept;
  for (Edge e : pool) {
    if (kept.size() >= target) break;
    kept.push_back(e);
    if (!is_planar(Graph::from_edge_list(n, kept))) kept.pop_back();
  }
  return Graph::from_edge_list(n, kept);
}

Graph gen_sparse_planar(std::uint64_t seed, int n, int keep_percent) {
  if (n < 4) throw Error(Errc::InvalidParams, "sparse generator needs n >= 4");
  Rng rng(seed);
  const Graph full = gen_apollonian(rng.next(), n);
  // Random spanning tree by randomized DFS, then keep other edges at random.
  std::vector<char> seen(n, 0);
  std::set<Edge> tree;
  std::vector<Vertex> stack{rng.below(n)};
  seen[stack.back()] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    std::vector<Vertex> fresh;
    for (Vertex w : full.neighbors(u))
      if (!seen[w]) fresh.push_back(w);
    if (fresh.empty()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = fresh[rng.below(static_cast<int>(fresh.size()))];
    seen[w] = 1;
    tree.insert({std::min(u, w), std::max(u, w)});
    stack.push_back(w);
  }
  std::vector<Edge> kept(tree.begin(), tree.end());
  for (Edge e : full.edges())
    if (!tree.count(e) && rng.chance(keep_percent)) kept.push_back(e);
  return Graph::from_edge_list(n, kept);
}

Graph gen_with_cut_vertices(std::uint64_t seed, int n) {
  if (n < 4) throw Error(Errc::InvalidParams, "cut-vertex generator needs n >= 4");
  Rng rng(seed);
  std::vector<Edge> edges;
  int used = 1;  // vertex 0 starts the first block
  while (used < n) {
    const int attach = rng.below(used);
    const int size = std::min(n - used, 2 + rng.below(std::max(1, n / 3)));
    Graph block = rng.chance(50) && size + 1 >= 4 ? gen_apollonian(rng.next(), size + 1)
                                                  : gen_sparse_planar(rng.next(), std::max(size + 1, 4), 60);
    // block vertex 0 is glued onto `attach`, the rest become fresh vertices
    const int fresh = std::min(block.vertex_count() - 1, n - used);
    auto id = [&](Vertex b) { return b == 0 ? attach : used + b - 1; };
    for (auto [u, v] : block.edges())
      if (u <= fresh && v <= fresh) edges.emplace_back(id(u), id(v));
    used += fresh;
  }
  Graph g = Graph::from_edge_list(n, edges);
  // Blocks truncated to fit may have lost their connection; reattach.
  auto parts = connected_components(g);
  for (std::size_t i = 1; i < parts.size(); ++i) edges.emplace_back(parts[0].front(), parts[i].front());
  return Graph::from_edge_list(n, edges);
}

}  // namespace fold9
