#include "fold9/triangulate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fold9/error.hpp"

namespace fold9 {

namespace {

class ChordInserter {
 public:
  explicit ChordInserter(const Graph& g) : rotation_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto rot = g.rotation(v);
      rotation_[v].assign(rot.begin(), rot.end());
    }
    for (auto [u, v] : g.edges()) present_.insert(key(u, v));
  }

  bool adjacent(Vertex u, Vertex v) const { return present_.count(key(u, v)) != 0; }

  /// Splits `walk` with a chord between positions i and j (i < j), returning
  /// the two sub-walks.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> split(const std::vector<Vertex>& walk,
                                                            std::size_t i, std::size_t j) {
    const std::size_t k = walk.size();
    const Vertex a = walk[i];
    const Vertex b = walk[j];
    if (a == b || adjacent(a, b))
      throw Error(Errc::InternalReductionFailure,
                  "chord (" + std::to_string(a) + "," + std::to_string(b) + ") would not be simple");
    // The chord sits in the corner of the face at each endpoint, right after
    // the walk's predecessor in that endpoint's rotation.
    insert_after(b, walk[(j + k - 1) % k], a);
    insert_after(a, walk[(i + k - 1) % k], b);
    present_.insert(key(a, b));
    added_.emplace_back(std::min(a, b), std::max(a, b));

    std::vector<Vertex> first(walk.begin() + static_cast<std::ptrdiff_t>(i),
                              walk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    std::vector<Vertex> second;
    for (std::size_t p = j; p != i; p = (p + 1) % k) second.push_back(walk[p]);
    second.push_back(a);
    return {std::move(first), std::move(second)};
  }

  TriangulationResult finish() {
    return {Graph::from_rotation(std::move(rotation_)), std::move(added_)};
  }

 private:
  static std::pair<Vertex, Vertex> key(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

  void insert_after(Vertex at, Vertex anchor, Vertex value) {
    auto& rot = rotation_[at];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw Error(Errc::InternalReductionFailure, "face walk left the rotation");
    rot.insert(it + 1, value);
  }

  std::vector<std::vector<Vertex>> rotation_;
  std::set<std::pair<Vertex, Vertex>> present_;
  std::vector<Edge> added_;
};

/// Position p whose vertex can see every non-neighboring walk vertex through
/// an absent chord, or -1.
int fan_apex(const std::vector<Vertex>& walk, const ChordInserter& state) {
  const std::size_t k = walk.size();
  for (std::size_t p = 0; p < k; ++p) {
    const Vertex apex = walk[p];
    if (std::count(walk.begin(), walk.end(), apex) != 1) continue;
    std::set<Vertex> targets;
    bool ok = true;
    for (std::size_t step = 2; step + 1 < k && ok; ++step) {
      const Vertex t = walk[(p + step) % k];
      ok = !state.adjacent(apex, t) && targets.insert(t).second;
    }
    if (ok) return static_cast<int>(p);
  }
  return -1;
}

}  // namespace

TriangulationResult triangulate(const Graph& g) {
  if (g.vertex_count() < 3)
    throw Error(Errc::TooSmall, "triangulation needs at least 3 vertices, got " +
                                    std::to_string(g.vertex_count()));
  if (!g.has_rotation()) throw Error(Errc::MissingEmbedding, "triangulate() needs a rotation system");
  if (!is_connected(g)) throw Error(Errc::InvalidParams, "triangulate() needs a connected graph");

  ChordInserter state(g);
  std::vector<std::vector<Vertex>> pending;
  for (Face& f : faces(g))
    if (f.length() > 3) pending.push_back(std::move(f.boundary));

  while (!pending.empty()) {
    std::vector<Vertex> walk = std::move(pending.back());
    pending.pop_back();
    if (walk.size() <= 3) continue;

    if (int apex = fan_apex(walk, state); apex >= 0) {
      // Rotate so the apex leads, then cut ears off one at a time.
      std::rotate(walk.begin(), walk.begin() + apex, walk.end());
      while (walk.size() > 3) {
        walk = state.split(walk, 0, 2).second;
        std::rotate(walk.begin(), walk.end() - 1, walk.end());
      }
      continue;
    }

    bool split = false;
    const std::size_t k = walk.size();
    for (std::size_t i = 0; i < k && !split; ++i) {
      for (std::size_t j = i + 2; j < k && !split; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (walk[i] == walk[j] || state.adjacent(walk[i], walk[j])) continue;
        auto [first, second] = state.split(walk, i, j);
        pending.push_back(std::move(first));
        pending.push_back(std::move(second));
        split = true;
      }
    }
    if (!split)
      throw Error(Errc::InternalReductionFailure,
                  "no admissible chord in a face of length " + std::to_string(k));
  }

  TriangulationResult result = state.finish();
  if (!is_triangulation(result.graph))
    throw Error(Errc::InternalReductionFailure, "chord insertion did not triangulate");
  return result;
}

bool is_triangulation(const Graph& g) {
  if (g.vertex_count() < 3 || !g.has_rotation()) return false;
  auto fs = faces(g);
  const bool all_triangles =
      std::all_of(fs.begin(), fs.end(), [](const Face& f) { return f.length() == 3; });
  return all_triangles && is_connected(g) &&
         g.edge_count() == 3 * static_cast<std::size_t>(g.vertex_count()) - 6;
}

}  // namespace fold9
