#include "fold9/configuration.hpp"

#include <algorithm>
#include <cstdlib>

#include "fold9/error.hpp"
#include "fold9/triangulate.hpp"

namespace fold9 {

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::SepClique: return "SepClique";
    case ConfigKind::Deg3: return "Deg3";
    case ConfigKind::Deg4: return "Deg4";
    case ConfigKind::L3_five_five: return "L3_five_five";
    case ConfigKind::L3_five_six: return "L3_five_six";
    case ConfigKind::L4_across: return "L4_across";
    case ConfigKind::L4_offset: return "L4_offset";
    case ConfigKind::L5: return "L5";
  }
  return "Unknown";
}

std::vector<Vertex> Configuration::uncolored() const {
  std::vector<Vertex> out{center};
  out.insert(out.end(), leaves.begin(), leaves.end());
  return out;
}

std::vector<Vertex> boundary_walk(const Graph& g, std::span<const Vertex> deleted) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (Vertex d : deleted) gone[d] = 1;

  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    for (Vertex w : g.rotation(v))
      if (!gone[w]) rotation[v].push_back(w);
  }
  const Graph rest = Graph::from_rotation(std::move(rotation));

  std::vector<char> touches(n, 0);
  for (Vertex d : deleted)
    for (Vertex w : g.neighbors(d))
      if (!gone[w]) touches[w] = 1;

  std::vector<Vertex> best;
  for (Face& f : faces(rest)) {
    if (f.length() <= 3 && deleted.size() > 0) {
      // Triangles of the remaining graph that were already faces are not
      // part of the hole; a 3-walk can only be new when the hole is that small.
      bool old_face = true;
      for (std::size_t i = 0; i < f.length() && old_face; ++i) {
        const Vertex a = f.boundary[i];
        const Vertex b = f.boundary[(i + 1) % f.length()];
        old_face = g.rotation_successor(b, a) == f.boundary[(i + 2) % f.length()];
      }
      if (old_face) continue;
    }
    const bool relevant = std::any_of(f.boundary.begin(), f.boundary.end(),
                                      [&](Vertex w) { return touches[w]; });
    if (relevant && f.length() > best.size()) best = std::move(f.boundary);
  }
  return best;
}

int link_distance(const Graph& g, Vertex v, Vertex a, Vertex b) {
  auto rot = g.rotation(v);
  const int d = static_cast<int>(rot.size());
  const int pa = static_cast<int>(std::find(rot.begin(), rot.end(), a) - rot.begin());
  const int pb = static_cast<int>(std::find(rot.begin(), rot.end(), b) - rot.begin());
  if (pa == d || pb == d) throw Error(Errc::InvalidParams, "link_distance() needs two neighbors of v");
  const int diff = std::abs(pa - pb);
  return std::min(diff, d - diff);
}

namespace {

bool independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
  return true;
}

Configuration make(const Graph& g, ConfigKind kind, Vertex center, std::vector<Vertex> leaves) {
  Configuration cfg;
  cfg.kind = kind;
  cfg.center = center;
  for (Vertex u : leaves) cfg.degrees.push_back(g.degree(u));
  cfg.leaves = std::move(leaves);
  cfg.boundary = boundary_walk(g, cfg.uncolored());
  return cfg;
}

void collect_l3(const Graph& g, Vertex v, std::vector<Configuration>& out) {
  if (g.degree(v) != 5) return;
  auto nbrs = g.neighbors(v);
  for (Vertex u1 : nbrs) {
    if (g.degree(u1) != 5) continue;
    for (Vertex u2 : nbrs) {
      if (u2 == u1 || g.degree(u2) > 6 || g.adjacent(u1, u2)) continue;
      // both leaves of degree 5: list each unordered pair once
      if (g.degree(u2) == 5 && u2 < u1) continue;
      const ConfigKind kind = g.degree(u2) == 5 ? ConfigKind::L3_five_five : ConfigKind::L3_five_six;
      out.push_back(make(g, kind, v, {u1, u2}));
    }
  }
}

void collect_l4(const Graph& g, Vertex v, std::vector<Configuration>& out) {
  if (g.degree(v) != 6) return;
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (g.degree(nbrs[i]) > 6) continue;
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.degree(nbrs[j]) > 6 || g.adjacent(nbrs[i], nbrs[j])) continue;
      const ConfigKind kind = link_distance(g, v, nbrs[i], nbrs[j]) == 3 ? ConfigKind::L4_across
                                                                          : ConfigKind::L4_offset;
      out.push_back(make(g, kind, v, {nbrs[i], nbrs[j]}));
    }
  }
}

void collect_l5(const Graph& g, Vertex v, std::vector<Configuration>& out) {
  if (g.degree(v) != 7) return;
  auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vertex leaves[3] = {nbrs[i], nbrs[j], nbrs[k]};
        int fives = 0;
        bool small = true;
        for (Vertex u : leaves) {
          small = small && g.degree(u) <= 6;
          fives += g.degree(u) == 5;
        }
        if (!small || fives == 0 || !independent(g, leaves)) continue;
        out.push_back(make(g, ConfigKind::L5, v, {leaves[0], leaves[1], leaves[2]}));
      }
}

}  // namespace

std::vector<Configuration> configurations_at(const Graph& g, Vertex v) {
  std::vector<Configuration> out;
  collect_l3(g, v, out);
  collect_l4(g, v, out);
  collect_l5(g, v, out);
  return out;
}

std::vector<Configuration> find_all_configurations(const Graph& g) {
  std::vector<Configuration> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) collect_l3(g, v, out);
  for (Vertex v = 0; v < g.vertex_count(); ++v) collect_l4(g, v, out);
  for (Vertex v = 0; v < g.vertex_count(); ++v) collect_l5(g, v, out);
  return out;
}

Configuration find_configuration(const Graph& g) {
  if (!is_triangulation(g)) throw Error(Errc::PreconditionViolation, "not an embedded triangulation");
  if (g.min_degree() < 5)
    throw Error(Errc::PreconditionViolation, "minimum degree " + std::to_string(g.min_degree()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Configuration> found;
    collect_l3(g, v, found);
    if (!found.empty()) return found.front();
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Configuration> found;
    collect_l4(g, v, found);
    if (!found.empty()) return found.front();
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Configuration> found;
    collect_l5(g, v, found);
    if (!found.empty()) return found.front();
  }
  throw Error(Errc::NotFound, "no L3/L4/L5 configuration in a triangulation on " +
                                  std::to_string(g.vertex_count()) + " vertices");
}

bool is_valid_configuration(const Graph& g, const Configuration& cfg) {
  if (cfg.kind == ConfigKind::SepClique) {
    return !cfg.clique.empty() && !connected_without(g, cfg.clique);
  }
  const Vertex v = cfg.center;
  if (v < 0 || v >= g.vertex_count()) return false;
  for (Vertex u : cfg.leaves)
    if (!g.adjacent(v, u)) return false;
  if (!independent(g, cfg.leaves)) return false;
  auto deg = [&](std::size_t i) { return g.degree(cfg.leaves[i]); };
  const std::size_t k = cfg.leaves.size();
  switch (cfg.kind) {
    case ConfigKind::SepClique: return false;
    case ConfigKind::Deg3: return g.degree(v) == 3 && k == 0;
    case ConfigKind::Deg4: return g.degree(v) == 4 && k == 0;
    case ConfigKind::L3_five_five:
      return g.degree(v) == 5 && k == 2 && deg(0) == 5 && deg(1) == 5;
    case ConfigKind::L3_five_six:
      return g.degree(v) == 5 && k == 2 && deg(0) == 5 && deg(1) == 6;
    case ConfigKind::L4_across:
    case ConfigKind::L4_offset: {
      if (g.degree(v) != 6 || k != 2 || deg(0) > 6 || deg(1) > 6) return false;
      const int dist = link_distance(g, v, cfg.leaves[0], cfg.leaves[1]);
      return cfg.kind == ConfigKind::L4_across ? dist == 3 : dist == 2;
    }
    case ConfigKind::L5: {
      if (g.degree(v) != 7 || k != 3) return false;
      bool has_five = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (deg(i) > 6) return false;
        has_five = has_five || deg(i) == 5;
      }
      return has_five;
    }
  }
  return false;
}

}  // namespace fold9
