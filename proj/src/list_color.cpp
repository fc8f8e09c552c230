#include "fold9/list_color.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fold9/error.hpp"

namespace fold9 {

StarColoring extend_fact1(const ListAssignment& lists) {
  const std::size_t real_leaves = lists.leaves.size();
  if (real_leaves != 2 && real_leaves != 3)
    throw Error(Errc::InvalidParams, "star must have 2 or 3 leaves");
  if (lists.center.size() < 5) throw Error(Errc::InvalidParams, "center list smaller than 5");
  for (ColorSet leaf : lists.leaves)
    if (leaf.size() < 3) throw Error(Errc::InvalidParams, "leaf list smaller than 3");

  // The counting argument needs the exact sizes 5 and 3; larger lists are
  // trimmed. A P3 gets a phantom third leaf.
  const ColorSet center = lists.center.smallest(5);
  std::vector<ColorSet> leaves;
  for (ColorSet leaf : lists.leaves) leaves.push_back(leaf.smallest(3));
  if (leaves.size() == 2) leaves.push_back(ColorSet::range(1, ColorSet::kMaxColor).smallest(3));

  auto hits = [&](int c) {
    return static_cast<int>(std::count_if(leaves.begin(), leaves.end(),
                                          [c](ColorSet leaf) { return leaf.contains(c); }));
  };

  int chosen = 0;
  for (int c : center.to_vector())
    if (hits(c) <= 1) {
      chosen = c;
      break;
    }
  if (chosen == 0)
    throw Error(Errc::InternalReductionFailure, "no center color shared with at most one leaf");

  int partner = 0;
  auto hit_leaf = std::find_if(leaves.begin(), leaves.end(),
                               [chosen](ColorSet leaf) { return leaf.contains(chosen); });
  if (hit_leaf != leaves.end()) {
    partner = (center - *hit_leaf).min();
  } else {
    int fewest = std::numeric_limits<int>::max();
    for (int c : (center - ColorSet{chosen}).to_vector())
      if (hits(c) < fewest) {
        fewest = hits(c);
        partner = c;
      }
  }

  StarColoring out;
  out.center = ColorSet{chosen, partner};
  for (std::size_t i = 0; i < real_leaves; ++i) {
    const ColorSet pick = (leaves[i] - out.center).smallest(2);
    if (pick.size() != 2) throw Error(Errc::InternalReductionFailure, "leaf left with fewer than 2 colors");
    out.leaves.push_back(pick);
  }
  return out;
}

namespace {

class ListSearch {
 public:
  ListSearch(const Graph& pattern, std::span<const ColorSet> lists, int fold)
      : pattern_(pattern), lists_(lists.begin(), lists.end()), fold_(fold),
        assigned_(pattern.vertex_count()), done_(pattern.vertex_count(), 0) {}

  bool run() {
    Vertex next = -1;
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < pattern_.vertex_count(); ++v) {
      if (done_[v]) continue;
      const int room = available(v).size();
      if (room < best) {
        best = room;
        next = v;
      }
    }
    if (next < 0) return true;
    if (best < fold_) return false;
    for (ColorSet choice : subsets_of_size(available(next), fold_)) {
      assigned_[next] = choice;
      done_[next] = 1;
      if (run()) return true;
      done_[next] = 0;
    }
    return false;
  }

  std::vector<ColorSet> result() const { return assigned_; }

 private:
  ColorSet available(Vertex v) const {
    ColorSet room = lists_[v];
    for (Vertex w : pattern_.neighbors(v))
      if (done_[w]) room -= assigned_[w];
    return room;
  }

  const Graph& pattern_;
  std::vector<ColorSet> lists_;
  int fold_;
  std::vector<ColorSet> assigned_;
  std::vector<char> done_;
};

}  // namespace

std::optional<std::vector<ColorSet>> extend_backtracking(const Graph& pattern,
                                                         std::span<const ColorSet> lists, int fold) {
  if (static_cast<int>(lists.size()) != pattern.vertex_count())
    throw Error(Errc::InvalidParams, "one list per pattern vertex required");
  if (fold < 0) throw Error(Errc::InvalidParams, "negative fold");
  ListSearch search(pattern, lists, fold);
  if (!search.run()) return std::nullopt;
  return search.result();
}

Graph star_pattern(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, edges);
}

std::vector<ColorSet> star_lists(const ListAssignment& lists) {
  std::vector<ColorSet> out{lists.center};
  out.insert(out.end(), lists.leaves.begin(), lists.leaves.end());
  return out;
}

ListAssignment tightness_lists(int fold, int palette) {
  if (fold < 1 || palette <= 3 * fold || palette > ColorSet::kMaxColor)
    throw Error(Errc::InvalidParams, "tightness lists need s > 3t, got t=" + std::to_string(fold) +
                                         " s=" + std::to_string(palette));
  const int a = palette - 2 * fold;
  const int b = palette - 3 * fold;
  return ListAssignment{ColorSet::range(1, a), {ColorSet::range(1, b), ColorSet::range(a - b + 1, a)}};
}

bool tightness_feasible(int fold, int palette) {
  const ListAssignment lists = tightness_lists(fold, palette);
  const auto flat = star_lists(lists);
  return extend_backtracking(star_pattern(2), flat, fold).has_value();
}

}  // namespace fold9
