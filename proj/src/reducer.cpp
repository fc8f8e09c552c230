#include "fold9/reducer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "fold9/error.hpp"
#include "fold9/list_color.hpp"
#include "fold9/triangulate.hpp"

namespace fold9 {

namespace {

const ColorSet kFullPalette = ColorSet::range(1, Reducer::kPalette);

void check_proper(const Graph& g, const FoldColoring& c, const char* where) {
  for (auto [u, v] : g.edges())
    if (!c.sets[u].disjoint(c.sets[v]))
      throw Error(Errc::InternalReductionFailure,
                  std::string(where) + ": adjacent " + std::to_string(u) + "," + std::to_string(v) +
                      " share colors");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (c.sets[v].size() != c.fold)
      throw Error(Errc::InternalReductionFailure,
                  std::string(where) + ": vertex " + std::to_string(v) + " has " +
                      std::to_string(c.sets[v].size()) + " colors");
}

class FoldSearch {
 public:
  FoldSearch(const Graph& g, int fold, int palette)
      : g_(g), fold_(fold), palette_(ColorSet::range(1, palette)), sets_(g.vertex_count()),
        done_(g.vertex_count(), 0) {}

  bool run(int placed) {
    if (placed == g_.vertex_count()) return true;
    Vertex next = -1;
    int best_room = std::numeric_limits<int>::max();
    int best_degree = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (done_[v]) continue;
      const int room = room_of(v).size();
      if (room < best_room || (room == best_room && g_.degree(v) > best_degree)) {
        best_room = room;
        best_degree = g_.degree(v);
        next = v;
      }
    }
    if (best_room < fold_) return false;
    done_[next] = 1;
    for (ColorSet choice : subsets_of_size(room_of(next), fold_)) {
      sets_[next] = choice;
      if (run(placed + 1)) return true;
    }
    done_[next] = 0;
    sets_[next] = ColorSet{};
    return false;
  }

  std::vector<ColorSet> sets() const { return sets_; }

 private:
  ColorSet room_of(Vertex v) const {
    ColorSet room = palette_;
    for (Vertex w : g_.neighbors(v))
      if (done_[w]) room -= sets_[w];
    return room;
  }

  const Graph& g_;
  int fold_;
  ColorSet palette_;
  std::vector<ColorSet> sets_;
  std::vector<char> done_;
};

}  // namespace

std::optional<FoldColoring> search_fold_coloring(const Graph& g, int fold, int palette) {
  if (fold < 1 || palette < fold || palette > ColorSet::kMaxColor)
    throw Error(Errc::InvalidParams, "bad fold/palette");
  FoldSearch search(g, fold, palette);
  if (!search.run(0)) return std::nullopt;
  return FoldColoring{fold, palette, search.sets()};
}

std::vector<int> aligning_permutation(const std::vector<ColorSet>& from, const std::vector<ColorSet>& to,
                                      int palette) {
  if (from.size() != to.size()) throw Error(Errc::InvalidParams, "alignment needs matching sets");
  std::vector<int> perm(palette + 1, 0);
  ColorSet used_from, used_to;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i].size() != to[i].size() || !used_from.disjoint(from[i]) || !used_to.disjoint(to[i]))
      throw Error(Errc::InvalidParams, "alignment needs disjoint, equal-sized sets");
    auto a = from[i].to_vector();
    auto b = to[i].to_vector();
    for (std::size_t k = 0; k < a.size(); ++k) perm[a[k]] = b[k];
    used_from |= from[i];
    used_to |= to[i];
  }
  auto free_from = (ColorSet::range(1, palette) - used_from).to_vector();
  auto free_to = (ColorSet::range(1, palette) - used_to).to_vector();
  for (std::size_t k = 0; k < free_from.size(); ++k) perm[free_from[k]] = free_to[k];
  return perm;
}

ColorSet apply_permutation(ColorSet s, const std::vector<int>& perm) {
  ColorSet out;
  for (int c : s.to_vector()) out.insert(perm.at(c));
  return out;
}

Reducer::Reducer(ReducerOptions options) : options_(options) {
  options_.base_threshold = std::max(options_.base_threshold, 4);
}

FoldColoring Reducer::color(const Graph& g) {
  if (!is_planar(g)) throw Error(Errc::NonPlanar, "input graph is not planar");
  FoldColoring c = color_any(g.without_rotation());
  check_proper(g, c, "color");
  return c;
}

FoldColoring Reducer::color_any(const Graph& g) {
  struct DepthGuard {
    int& depth;
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
  } guard(depth_);
  stats_.max_depth = std::max(stats_.max_depth, depth_);

  const int n = g.vertex_count();
  FoldColoring out{kFold, kPalette, std::vector<ColorSet>(n)};
  if (n == 0) return out;

  auto components = connected_components(g);
  if (components.size() > 1) {
    for (const auto& comp : components) {
      FoldColoring part = color_any(induced_subgraph(g, comp));
      for (std::size_t i = 0; i < comp.size(); ++i) out.sets[comp[i]] = part.sets[i];
    }
    return out;
  }

  if (n <= options_.base_threshold) {
    ++stats_.base_cases;
    auto found = search_fold_coloring(g, kFold, kPalette);
    if (!found) throw Error(Errc::InternalReductionFailure, "base case has no 2-fold 9-coloring");
    return *found;
  }

  const Graph embedded = compute_embedding(g);
  return color_triangulation(triangulate(embedded).graph);
}

FoldColoring Reducer::color_triangulation(const Graph& tri) {
  if (auto clique = find_separating_clique(tri, 4)) {
    ++stats_.by_kind[static_cast<std::size_t>(ConfigKind::SepClique)];
    return split_on_clique(tri, *clique);
  }

  // Low degree first; in a triangulation without separating triangles a
  // 3-vertex cannot occur, so the planner is only reached with a 4-vertex.
  for (Vertex v = 0; v < tri.vertex_count(); ++v) {
    if (tri.degree(v) > 4) continue;
    Configuration cfg;
    cfg.kind = tri.degree(v) == 4 ? ConfigKind::Deg4 : ConfigKind::Deg3;
    cfg.center = v;
    cfg.boundary = boundary_walk(tri, std::vector<Vertex>{v});
    return reduce_and_recurse(tri, cfg, plan_identifications(cfg, tri));
  }

  auto candidates = find_all_configurations(tri);
  if (candidates.empty())
    throw Error(Errc::NotFound, "no reducible configuration in a triangulation on " +
                                    std::to_string(tri.vertex_count()) + " vertices");
  for (const Configuration& cfg : candidates) {
    IdentificationPlan plan;
    try {
      plan = plan_identifications(cfg, tri);
    } catch (const Error& e) {
      if (e.code() != Errc::PlanNotFound) throw;
      ++stats_.plan_retries;
      continue;
    }
    return reduce_and_recurse(tri, cfg, plan);
  }
  throw Error(Errc::InternalReductionFailure,
              "no configuration admits an identification plan (" + std::to_string(candidates.size()) +
                  " tried)");
}

FoldColoring Reducer::split_on_clique(const Graph& g, const std::vector<Vertex>& clique) {
  const int n = g.vertex_count();
  std::vector<char> in_clique(n, 0);
  for (Vertex x : clique) in_clique[x] = 1;

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_clique[v]) rest.push_back(v);
  const Graph remainder = induced_subgraph(g, rest);
  auto parts = connected_components(remainder);
  if (parts.size() < 2) throw Error(Errc::InvalidParams, "clique does not separate the graph");

  FoldColoring out{kFold, kPalette, std::vector<ColorSet>(n)};
  std::vector<ColorSet> reference;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Vertex> piece;
    for (Vertex local : parts[p]) piece.push_back(rest[local]);
    piece.insert(piece.end(), clique.begin(), clique.end());
    std::sort(piece.begin(), piece.end());

    FoldColoring sub = color_any(induced_subgraph(g, piece));
    std::vector<ColorSet> on_clique;
    for (Vertex x : clique) {
      const auto at = std::lower_bound(piece.begin(), piece.end(), x) - piece.begin();
      on_clique.push_back(sub.sets[at]);
    }
    if (p == 0) reference = on_clique;
    const std::vector<int> perm = aligning_permutation(on_clique, reference, kPalette);
    for (std::size_t i = 0; i < piece.size(); ++i)
      out.sets[piece[i]] = apply_permutation(sub.sets[i], perm);
  }
  check_proper(g, out, "split_on_clique");
  return out;
}

FoldColoring Reducer::reduce_and_recurse(const Graph& g, const Configuration& cfg,
                                         const IdentificationPlan& plan) {
  ++stats_.by_kind[static_cast<std::size_t>(cfg.kind)];
  auto [reduced, map] = contract(g, plan.groups, plan.deleted);
  if (reduced.vertex_count() >= g.vertex_count())
    throw Error(Errc::InternalReductionFailure, "contraction did not shrink the graph");
  const FoldColoring sub = color_any(reduced.without_rotation());

  const int n = g.vertex_count();
  FoldColoring out{kFold, kPalette, std::vector<ColorSet>(n)};
  for (Vertex v = 0; v < n; ++v)
    if (map.survives(v)) out.sets[v] = sub.sets[map(v)];

  std::vector<char> uncolored(n, 0);
  for (Vertex d : plan.deleted) uncolored[d] = 1;
  auto list_of = [&](Vertex w) {
    ColorSet list = kFullPalette;
    for (Vertex x : g.neighbors(w))
      if (!uncolored[x]) list -= out.sets[x];
    return list;
  };

  ListAssignment lists{list_of(cfg.center), {}};
  for (Vertex u : cfg.leaves) lists.leaves.push_back(list_of(u));

  const bool fact1_shape = !cfg.leaves.empty() && lists.center.size() >= 5 &&
                           std::all_of(lists.leaves.begin(), lists.leaves.end(),
                                       [](ColorSet l) { return l.size() >= 3; });
  if (fact1_shape) {
    const StarColoring star = extend_fact1(lists);
    out.sets[cfg.center] = star.center;
    for (std::size_t i = 0; i < cfg.leaves.size(); ++i) out.sets[cfg.leaves[i]] = star.leaves[i];
  } else {
    // A lone center, or lists larger than the budgets promise but not in the
    // star shape: fall back to exhaustive extension.
    const auto flat = star_lists(lists);
    const Graph pattern = induced_subgraph(g, plan.deleted);
    auto found = extend_backtracking(pattern, flat, kFold);
    if (!found)
      throw Error(Errc::InternalReductionFailure,
                  std::string("cannot extend after ") + std::string(to_string(cfg.kind)) + " at " +
                      std::to_string(cfg.center));
    for (std::size_t i = 0; i < plan.deleted.size(); ++i) out.sets[plan.deleted[i]] = (*found)[i];
  }
  check_proper(g, out, "reduce_and_recurse");
  return out;
}

FoldColoring color(const Graph& g, ReducerOptions options) {
  Reducer reducer(options);
  return reducer.color(g);
}

}  // namespace fold9
