#include "fold9/homomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "fold9/error.hpp"

namespace fold9 {

namespace {

using Bits = boost::dynamic_bitset<>;
using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(Limit limit) {
    if (limit) end_ = Clock::now() + *limit;
  }

  void tick() {
    if (!end_ || (++calls_ & 1023) != 0) return;
    if (Clock::now() > *end_) throw Error(Errc::Timeout, "search exceeded its time limit");
  }

 private:
  std::optional<Clock::time_point> end_;
  unsigned long calls_ = 0;
};

std::vector<Bits> adjacency_bits(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Bits> rows(n, Bits(n));
  for (auto [u, v] : g.edges()) {
    rows[u].set(v);
    rows[v].set(u);
  }
  return rows;
}

/// Branch and bound with a greedy coloring bound on the candidate set.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, Limit limit) : adj_(adjacency_bits(g)), deadline_(limit) {}

  std::vector<Vertex> run() {
    Bits all(adj_.size());
    all.set();
    std::vector<Vertex> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<Vertex>& current, Bits candidates) {
    deadline_.tick();
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_bound(candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bits next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  void color_bound(Bits uncolored, std::vector<Vertex>& order, std::vector<int>& bound) const {
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits open = uncolored;
      for (auto v = open.find_first(); v != Bits::npos; v = open.find_next(v)) {
        open -= adj_[v];
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(color);
      }
    }
  }

  std::vector<Bits> adj_;
  Deadline deadline_;
  std::vector<Vertex> best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, Limit limit)
      : g_(g), k_(k), colors_(g.vertex_count(), -1),
        seen_(static_cast<std::size_t>(g.vertex_count()) * k, 0), deadline_(limit) {}

  bool run(const std::vector<Vertex>& clique) {
    if (static_cast<int>(clique.size()) > k_) return false;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
    opened_ = static_cast<int>(clique.size());
    return search(g_.vertex_count() - static_cast<int>(clique.size()));
  }

  const std::vector<int>& colors() const { return colors_; }

 private:
  int saturation(Vertex v) const {
    int s = 0;
    for (int c = 0; c < k_; ++c) s += seen_[v * k_ + c] > 0;
    return s;
  }

  void assign(Vertex v, int c) {
    colors_[v] = c;
    for (Vertex w : g_.neighbors(v)) ++seen_[w * k_ + c];
  }

  void unassign(Vertex v) {
    const int c = colors_[v];
    for (Vertex w : g_.neighbors(v)) --seen_[w * k_ + c];
    colors_[v] = -1;
  }

  bool search(int remaining) {
    if (remaining == 0) return true;
    deadline_.tick();
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (colors_[v] >= 0) continue;
      const int sat = saturation(v);
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) deg += colors_[w] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat == k_) return false;
    const int top = std::min(opened_ + 1, k_);
    for (int c = 0; c < top; ++c) {
      if (seen_[pick * k_ + c]) continue;
      const int saved = opened_;
      opened_ = std::max(opened_, c + 1);
      assign(pick, c);
      if (search(remaining - 1)) return true;
      unassign(pick);
      opened_ = saved;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colors_;
  std::vector<int> seen_;
  int opened_ = 0;
  Deadline deadline_;
};

}  // namespace

Vertex KneserGraph::id_of(ColorSet s) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s, [](ColorSet a, ColorSet b) {
    return a.to_vector() < b.to_vector();
  });
  if (it == subsets.end() || *it != s)
    throw Error(Errc::NotAColoring, s.str() + " is not a vertex of K_{" + std::to_string(n) + ":" +
                                        std::to_string(k) + "}");
  return static_cast<Vertex>(it - subsets.begin());
}

KneserGraph kneser(int n, int k) {
  if (k < 1 || n < k || n > ColorSet::kMaxColor) throw Error(Errc::InvalidParams, "kneser needs n >= k >= 1");
  KneserGraph out{n, k, subsets_of_size(ColorSet::range(1, n), k), {}};
  std::vector<Edge> edges;
  const int count = static_cast<int>(out.subsets.size());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (out.subsets[a].disjoint(out.subsets[b])) edges.emplace_back(a, b);
  out.graph = Graph::from_edge_list(count, edges);
  return out;
}

Graph categorical_product(const Graph& g1, const Graph& g2) {
  const int n2 = g2.vertex_count();
  std::vector<Edge> edges;
  for (auto [a1, a2] : g1.edges())
    for (auto [b1, b2] : g2.edges()) {
      edges.emplace_back(a1 * n2 + b1, a2 * n2 + b2);
      edges.emplace_back(a1 * n2 + b2, a2 * n2 + b1);
    }
  return Graph::from_edge_list(g1.vertex_count() * n2, edges);
}

HomMap coloring_to_hom(const FoldColoring& c, const KneserGraph& target) {
  HomMap h;
  h.reserve(c.sets.size());
  for (std::size_t v = 0; v < c.sets.size(); ++v) {
    if (c.sets[v].size() != target.k)
      throw Error(Errc::NotAColoring, "vertex " + std::to_string(v) + " has " +
                                          std::to_string(c.sets[v].size()) + " colors");
    h.push_back(target.id_of(c.sets[v]));
  }
  return h;
}

bool verify_hom(const Graph& g, const HomMap& h, const Graph& target) {
  if (static_cast<int>(h.size()) != g.vertex_count()) return false;
  for (Vertex x : h)
    if (x < 0 || x >= target.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (h[u] == h[v] || !target.adjacent(h[u], h[v])) return false;
  return true;
}

bool verify_fold_coloring(const Graph& g, const FoldColoring& c) {
  if (static_cast<int>(c.sets.size()) != g.vertex_count()) return false;
  const ColorSet palette = ColorSet::range(1, c.palette);
  for (ColorSet s : c.sets)
    if (s.size() != c.fold || !s.subset_of(palette)) return false;
  for (auto [u, v] : g.edges())
    if (!c.sets[u].disjoint(c.sets[v])) return false;
  return true;
}

HomMap pair_hom(const HomMap& h1, const HomMap& h2, int n2) {
  if (h1.size() != h2.size()) throw Error(Errc::InvalidParams, "maps differ in length");
  HomMap out(h1.size());
  for (std::size_t v = 0; v < h1.size(); ++v) out[v] = h1[v] * n2 + h2[v];
  return out;
}

bool verify_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

std::vector<int> projection_coloring(const std::vector<int>& colors1, int n2) {
  std::vector<int> out;
  out.reserve(colors1.size() * n2);
  for (int c : colors1) out.insert(out.end(), n2, c);
  return out;
}

std::vector<Vertex> maximum_clique(const Graph& g, Limit limit) {
  if (g.vertex_count() == 0) return {};
  return CliqueSearch(g, limit).run();
}

int clique_number(const Graph& g, Limit limit) {
  return static_cast<int>(maximum_clique(g, limit).size());
}

std::optional<std::vector<int>> find_coloring(const Graph& g, int k, Limit limit) {
  if (k < 0) throw Error(Errc::InvalidParams, "negative color count");
  if (g.vertex_count() == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  const auto clique = maximum_clique(g, limit);
  ColoringSearch search(g, k, limit);
  if (!search.run(clique)) return std::nullopt;
  return search.colors();
}

bool k_colorable(const Graph& g, int k, Limit limit) { return find_coloring(g, k, limit).has_value(); }

int chromatic_number(const Graph& g, Limit limit) {
  if (g.vertex_count() == 0) return 0;
  const auto end = limit ? std::optional(Clock::now() + *limit) : std::nullopt;
  auto left = [&]() -> Limit {
    if (!end) return std::nullopt;
    return std::max(std::chrono::milliseconds(1),
                    std::chrono::duration_cast<std::chrono::milliseconds>(*end - Clock::now()));
  };
  for (int k = clique_number(g, left());; ++k)
    if (k_colorable(g, k, left())) return k;
}

Graph wagner() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
  return Graph::from_edge_list(8, edges);
}

FoldColoring lift_to_fold(const std::vector<int>& colors, int palette) {
  FoldColoring out{2, palette, {}};
  for (int c : colors) {
    if (c < 0 || 2 * c + 2 > palette) throw Error(Errc::InvalidParams, "color does not fit the palette");
    out.sets.push_back(ColorSet{2 * c + 1, 2 * c + 2});
  }
  return out;
}

}  // namespace fold9
