#include "fold9/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "fold9/error.hpp"
#include "fold9/homomorphism.hpp"

namespace fold9 {

namespace {

using Mask = std::uint32_t;

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 31)
    throw Error(Errc::TooLarge, std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                                    std::to_string(std::min(cap, 31)));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    out[u] |= Mask{1} << v;
    out[v] |= Mask{1} << u;
  }
  return out;
}

VertexSet members(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

/// Bron–Kerbosch with pivoting on the complement graph.
void bron_kerbosch(const std::vector<Mask>& nbr, Mask all, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  const Mask px = p | x;
  Vertex pivot = std::countr_zero(px);
  int best = -1;
  for (Mask rest = px; rest; rest &= rest - 1) {
    const Vertex u = std::countr_zero(rest);
    const int reach = std::popcount(p & ~nbr[u] & ~(Mask{1} << u));
    if (reach > best) {
      best = reach;
      pivot = u;
    }
  }
  const Mask pivot_non = all & ~nbr[pivot] & ~(Mask{1} << pivot);
  for (Mask rest = p & ~pivot_non; rest; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    const Mask bit = Mask{1} << v;
    const Mask non = all & ~nbr[v] & ~bit;
    bron_kerbosch(nbr, all, r | bit, p & non, x & non, out);
    p &= ~bit;
    x |= bit;
  }
}

/// Dense simplex tableau for max Σ y subject to Σ_{v∈S} y_v <= 1 for every
/// set S of the family, y >= 0. This is the dual of the covering LP; the
/// slack reduced costs at the optimum are the optimal covering weights.
class PackingSimplex {
 public:
  PackingSimplex(int n, const std::vector<VertexSet>& family)
      : n_(n), m_(static_cast<int>(family.size())), cols_(n + m_ + 1),
        tab_(static_cast<std::size_t>(m_ + 1) * cols_), basis_(m_) {
    for (int i = 0; i < m_; ++i) {
      for (Vertex v : family[i]) at(i, v) = 1;
      at(i, n_ + i) = 1;
      at(i, cols_ - 1) = 1;
      basis_[i] = n_ + i;
    }
    for (int j = 0; j < n_; ++j) at(m_, j) = -1;
  }

  void solve() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_ + m_; ++j)
        if (at(m_, j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        const Rational ratio = at(i, cols_ - 1) / at(i, enter);
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw Error(Errc::InternalReductionFailure, "packing LP is unbounded");
      pivot(leave, enter);
    }
  }

  Rational value() const { return at(m_, cols_ - 1); }
  Rational slack_price(int i) const { return at(m_, n_ + i); }

 private:
  Rational& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }

  void pivot(int row, int col) {
    const Rational p = at(row, col);
    for (int c = 0; c < cols_; ++c)
      if (at(row, c) != 0) at(row, c) /= p;
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const Rational f = at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < cols_; ++c)
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
    }
    basis_[row] = col;
  }

  int n_;
  int m_;
  int cols_;
  std::vector<Rational> tab_;
  std::vector<int> basis_;
};

bool independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  if (n == 0) return {};
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> found;
  bron_kerbosch(neighbor_masks(g), all, 0, all, 0, found);
  std::vector<VertexSet> out;
  for (Mask m : found) out.push_back(members(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  const auto nbr = neighbor_masks(g);
  std::vector<VertexSet> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    bool ok = true;
    for (Mask rest = m; rest && ok; rest &= rest - 1) ok = (nbr[std::countr_zero(rest)] & m) == 0;
    if (ok) out.push_back(members(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational WeightFunction::total() const {
  Rational sum = 0;
  for (const auto& e : entries) sum += e.weight;
  return sum;
}

std::vector<Rational> WeightFunction::coverage(int vertex_count) const {
  std::vector<Rational> out(vertex_count, Rational(0));
  for (const auto& e : entries)
    for (Vertex v : e.set) out.at(v) += e.weight;
  return out;
}

bool WeightFunction::is_fractional_coloring(const Graph& g) const {
  for (const auto& e : entries) {
    if (e.weight < 0 || !independent(g, e.set)) return false;
    for (Vertex v : e.set)
      if (v < 0 || v >= g.vertex_count()) return false;
  }
  for (const Rational& c : coverage(g.vertex_count()))
    if (c < 1) return false;
  return true;
}

FractionalSolution solve_covering_lp(const Graph& g, const std::vector<VertexSet>& family) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& s : family)
    for (Vertex v : s) covered.at(v) = 1;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw Error(Errc::InvalidParams, "the set family does not cover every vertex");

  PackingSimplex lp(g.vertex_count(), family);
  lp.solve();
  FractionalSolution out{lp.value(), {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Rational w = lp.slack_price(static_cast<int>(i));
    if (w != 0) out.weights.entries.push_back({family[i], w});
  }
  if (out.weights.total() != out.value || !out.weights.is_fractional_coloring(g))
    throw Error(Errc::InternalReductionFailure, "LP certificate does not check");
  return out;
}

FractionalSolution chi_f_solve(const Graph& g, int cap) {
  if (g.vertex_count() == 0) return {Rational(0), {}};
  return solve_covering_lp(g, enumerate_maximal_independent_sets(g, cap));
}

Rational chi_f_exact(const Graph& g, int cap) { return chi_f_solve(g, cap).value; }

WeightFunction coloring_to_weights(const Graph& g, const FoldColoring& c) {
  if (!verify_fold_coloring(g, c)) throw Error(Errc::NotAColoring, "not a proper fold coloring");
  WeightFunction out;
  for (int color = 1; color <= c.palette; ++color) {
    VertexSet cls;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (c.sets[v].contains(color)) cls.push_back(v);
    if (!cls.empty()) out.entries.push_back({cls, Rational(1, c.fold)});
  }
  return out;
}

int independence_number(const Graph& g, int cap) {
  int best = 0;
  for (const auto& s : enumerate_maximal_independent_sets(g, cap)) best = std::max(best, static_cast<int>(s.size()));
  return best;
}

}  // namespace fold9
