#include "fold9/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fold9/error.hpp"

namespace fold9 {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::IndexOutOfRange, "edge " + edge_str(u, v) + " with n=" + std::to_string(n));
    if (u == v) throw Error(Errc::IndexOutOfRange, "loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph Graph::from_rotation(std::vector<std::vector<Vertex>> rotation) {
  const int n = static_cast<int>(rotation.size());
  Graph g(n);
  std::size_t twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::InvalidParams, "repeated neighbor in rotation of " + std::to_string(v));
    for (Vertex w : sorted)
      if (w < 0 || w >= n || w == v)
        throw Error(Errc::IndexOutOfRange, "rotation entry " + edge_str(v, w));
    twice += sorted.size();
    g.adj_[v] = std::move(sorted);
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.adj_[v])
      if (!std::binary_search(g.adj_[w].begin(), g.adj_[w].end(), v))
        throw Error(Errc::InvalidParams, "asymmetric rotation at " + edge_str(v, w));
  g.edge_count_ = twice / 2;
  g.rotation_ = std::move(rotation);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
}

int Graph::min_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    best = v == 0 ? static_cast<int>(adj_[v].size()) : std::min(best, static_cast<int>(adj_[v].size()));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::span<const Vertex> Graph::rotation(Vertex v) const {
  if (!has_rotation()) throw Error(Errc::MissingEmbedding, "graph has no rotation system");
  check_vertex(v);
  return rotation_[v];
}

Vertex Graph::rotation_successor(Vertex v, Vertex u) const {
  auto rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw Error(Errc::InvalidParams, "not an edge " + edge_str(v, u));
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

Vertex Graph::rotation_predecessor(Vertex v, Vertex u) const {
  auto rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw Error(Errc::InvalidParams, "not an edge " + edge_str(v, u));
  return it == rot.begin() ? rot.back() : *(it - 1);
}

Graph Graph::without_rotation() const {
  Graph g = *this;
  g.rotation_.clear();
  return g;
}

VertexMap::VertexMap(std::vector<Vertex> image, int target_count)
    : image_(std::move(image)), target_count_(target_count) {}

VertexMap VertexMap::identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return VertexMap(std::move(image), n);
}

VertexMap VertexMap::then(const VertexMap& second) const {
  std::vector<Vertex> image(image_.size(), kDeleted);
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] != kDeleted) image[v] = second(image_[v]);
  return VertexMap(std::move(image), second.target_count());
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::optional<std::vector<std::vector<Vertex>>> boyer_myrvold(const Graph& g) {
  const int n = g.vertex_count();
  BoostGraph bg(n);
  int index = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, inserted] = boost::add_edge(u, v, bg);
    (void)inserted;
    boost::put(boost::edge_index, bg, e, index++);
  }
  std::vector<std::vector<BoostEdge>> embedding(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v) {
    rotation[v].reserve(embedding[v].size());
    for (const BoostEdge& e : embedding[v]) {
      const Vertex a = static_cast<Vertex>(boost::source(e, bg));
      const Vertex b = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(a == v ? b : a);
    }
  }
  return rotation;
}

}  // namespace

Graph compute_embedding(const Graph& g) {
  auto rotation = boyer_myrvold(g);
  if (!rotation) throw Error(Errc::NonPlanar, "graph with " + std::to_string(g.vertex_count()) +
                                                  " vertices and " + std::to_string(g.edge_count()) +
                                                  " edges has no planar embedding");
  return Graph::from_rotation(std::move(*rotation));
}

bool is_planar(const Graph& g) {
  if (g.vertex_count() >= 3 && g.edge_count() > 3 * static_cast<std::size_t>(g.vertex_count()) - 6)
    return false;
  return boyer_myrvold(g).has_value();
}

std::vector<Face> faces(const Graph& g) {
  if (!g.has_rotation()) throw Error(Errc::MissingEmbedding, "faces() needs a rotation system");
  const int n = g.vertex_count();
  // dart (v, i) = edge from v to rotation(v)[i]
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(g.rotation(v).size(), 0);
  auto index_of = [&](Vertex v, Vertex w) {
    auto rot = g.rotation(v);
    return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
  };

  std::vector<Face> out;
  for (Vertex start = 0; start < n; ++start) {
    for (std::size_t i = 0; i < used[start].size(); ++i) {
      if (used[start][i]) continue;
      Face face;
      Vertex u = start;
      std::size_t slot = i;
      while (!used[u][slot]) {
        used[u][slot] = 1;
        face.boundary.push_back(u);
        const Vertex v = g.rotation(u)[slot];
        // next dart leaves v towards the neighbor after u in v's rotation
        const auto rot_v = g.rotation(v);
        std::size_t back = index_of(v, u);
        slot = (back + 1) % rot_v.size();
        u = v;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::pair<Graph, VertexMap> contract(const Graph& g,
                                     const std::vector<std::vector<Vertex>>& groups,
                                     const std::vector<Vertex>& deleted) {
  const int n = g.vertex_count();
  constexpr int kFree = -2;
  std::vector<int> owner(n, kFree);  // group index, or -1 for deleted
  for (Vertex v : deleted) {
    if (v < 0 || v >= n) throw Error(Errc::IndexOutOfRange, "deleted vertex " + std::to_string(v));
    owner[v] = -1;
  }
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (Vertex v : groups[gi]) {
      if (v < 0 || v >= n) throw Error(Errc::IndexOutOfRange, "group vertex " + std::to_string(v));
      if (owner[v] != kFree)
        throw Error(Errc::InvalidParams, "vertex " + std::to_string(v) + " used twice in contraction");
      owner[v] = static_cast<int>(gi);
    }
    for (std::size_t a = 0; a < groups[gi].size(); ++a)
      for (std::size_t b = a + 1; b < groups[gi].size(); ++b)
        if (g.adjacent(groups[gi][a], groups[gi][b]))
          throw Error(Errc::AdjacentGroupMembers, edge_str(groups[gi][a], groups[gi][b]));
  }

  std::vector<Vertex> image(n, VertexMap::kDeleted);
  std::vector<Vertex> group_target(groups.size(), VertexMap::kDeleted);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -1) continue;
    if (owner[v] == kFree) {
      image[v] = next++;
    } else {
      Vertex& target = group_target[owner[v]];
      if (target == VertexMap::kDeleted) target = next++;
      image[v] = target;
    }
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (image[u] == VertexMap::kDeleted || image[v] == VertexMap::kDeleted) continue;
    edges.emplace_back(image[u], image[v]);
  }
  Graph reduced = Graph::from_edge_list(next, edges);
  if (g.has_rotation() && g.vertex_count() > 0) reduced = compute_embedding(reduced);
  return {std::move(reduced), VertexMap(std::move(image), next)};
}

std::vector<int> component_ids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<Vertex> queue;
    queue.push(s);
    comp[s] = count;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = count;
          queue.push(w);
        }
    }
    ++count;
  }
  return comp;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  auto ids = component_ids(g);
  int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[ids[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
  return Graph::from_edge_list(static_cast<int>(vertices.size()), edges);
}

bool connected_without(const Graph& g, std::span<const Vertex> removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex r : removed) seen[r] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == remaining;
}

std::optional<std::vector<Vertex>> find_separating_clique(const Graph& g, int max_size) {
  if (max_size < 1 || max_size > 4) throw Error(Errc::InvalidParams, "max_size must be in 1..4");
  const int n = g.vertex_count();
  std::vector<Vertex> clique;
  auto separates = [&] { return !connected_without(g, clique); };

  // Cliques are grown in lexicographic order with increasing members; each
  // size level is exhausted before the next.
  for (int size = 1; size <= max_size; ++size) {
    std::optional<std::vector<Vertex>> found;
    auto grow = [&](auto&& self, std::span<const Vertex> candidates) -> void {
      if (found) return;
      if (static_cast<int>(clique.size()) == size) {
        if (separates()) found = clique;
        return;
      }
      for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
        const Vertex v = candidates[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
          if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        clique.push_back(v);
        self(self, next);
        clique.pop_back();
      }
    };
    for (Vertex v = 0; v < n && !found; ++v) {
      std::vector<Vertex> later;
      for (Vertex w : g.neighbors(v))
        if (w > v) later.push_back(w);
      clique.push_back(v);
      grow(grow, later);
      clique.pop_back();
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace fold9
