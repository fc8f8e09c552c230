#include "fold9/planner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fold9/error.hpp"

namespace fold9 {

namespace {

using Mask = std::uint64_t;

int center_budget(ConfigKind kind) { return kind == ConfigKind::Deg4 ? 3 : 2; }

bool simple_cycle_over(const std::vector<Vertex>& walk, const std::vector<Vertex>& vertices) {
  std::set<Vertex> seen(walk.begin(), walk.end());
  if (seen.size() != walk.size()) return false;
  return seen == std::set<Vertex>(vertices.begin(), vertices.end());
}

/// Enumerates partitions of the boundary into independent blocks with an
/// exact block count, optionally restricted to non-crossing partitions of
/// the element order.
class PartitionSearch {
 public:
  struct Problem {
    std::vector<Mask> adjacent;         // among boundary elements
    std::vector<Mask> colored_nbrs;     // per uncolored vertex
    std::vector<int> budget;            // per uncolored vertex
  };

  template <typename Accept>
  PartitionSearch(const Problem& p, bool non_crossing, int blocks, Accept&& accept)
      : p_(p), non_crossing_(non_crossing), target_(blocks),
        block_of_(p.adjacent.size(), -1), accept_(std::forward<Accept>(accept)) {}

  bool run() { return place(0); }

 private:
  bool place(std::size_t i) {
    const int m = static_cast<int>(p_.adjacent.size());
    if (static_cast<int>(i) == m) return budgets_met() && accept_(block_of_, target_);
    const int remaining_after = m - static_cast<int>(i) - 1;
    const int blocks = static_cast<int>(members_.size());

    if (blocks + remaining_after >= target_) {
      for (int b = 0; b < blocks; ++b) {
        if (members_[b] & p_.adjacent[i]) continue;
        std::vector<int> saved_stack;
        if (non_crossing_) {
          auto it = std::find(open_.begin(), open_.end(), b);
          if (it == open_.end()) continue;
          saved_stack = open_;
          open_.erase(it + 1, open_.end());
        }
        members_[b] |= Mask{1} << i;
        block_of_[i] = b;
        const bool done = place(i + 1);
        members_[b] &= ~(Mask{1} << i);
        if (non_crossing_) open_ = std::move(saved_stack);
        if (done) return true;
      }
    }
    if (blocks < target_) {
      members_.push_back(Mask{1} << i);
      block_of_[i] = blocks;
      if (non_crossing_) open_.push_back(blocks);
      const bool done = place(i + 1);
      if (non_crossing_) open_.pop_back();
      members_.pop_back();
      if (done) return true;
    }
    block_of_[i] = -1;
    return false;
  }

  bool budgets_met() const {
    for (std::size_t w = 0; w < p_.colored_nbrs.size(); ++w) {
      Mask classes = 0;
      for (Mask rest = p_.colored_nbrs[w]; rest; rest &= rest - 1)
        classes |= Mask{1} << block_of_[std::countr_zero(rest)];
      if (std::popcount(classes) > p_.budget[w]) return false;
    }
    return true;
  }

  const Problem& p_;
  bool non_crossing_;
  int target_;
  std::vector<int> block_of_;
  std::vector<Mask> members_;
  std::vector<int> open_;
  std::function<bool(const std::vector<int>&, int)> accept_;
};

}  // namespace

IdentificationPlan plan_identifications(const Configuration& cfg, const Graph& g) {
  if (cfg.kind == ConfigKind::SepClique)
    throw Error(Errc::PlanNotFound, "separating cliques are split, not identified");
  if (cfg.kind == ConfigKind::Deg3)
    throw Error(Errc::PlanNotFound, "a 3-vertex in a triangulation sits inside a separating triangle");

  IdentificationPlan plan;
  plan.deleted = cfg.uncolored();
  plan.budget.assign(plan.deleted.size(), 3);
  plan.budget[0] = center_budget(cfg.kind);

  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex d : plan.deleted) gone[d] = 1;
  std::set<Vertex> colored_set;
  for (Vertex d : plan.deleted)
    for (Vertex w : g.neighbors(d))
      if (!gone[w]) colored_set.insert(w);
  std::vector<Vertex> colored(colored_set.begin(), colored_set.end());

  // Element order: the boundary walk when it is a simple cycle through all
  // colored neighbors, else first appearance on the walk, then by id.
  const bool simple = simple_cycle_over(cfg.boundary, colored);
  std::vector<Vertex> order;
  for (Vertex w : cfg.boundary)
    if (colored_set.count(w) && std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
  for (Vertex w : colored)
    if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
  if (order.size() > 64) throw Error(Errc::PlanNotFound, "boundary too large for the planner");

  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  PartitionSearch::Problem problem;
  problem.adjacent.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (i != j && g.adjacent(order[i], order[j])) problem.adjacent[i] |= Mask{1} << j;
  for (Vertex d : plan.deleted) {
    Mask nbrs = 0;
    for (Vertex w : g.neighbors(d))
      if (!gone[w]) nbrs |= Mask{1} << index.at(w);
    problem.colored_nbrs.push_back(nbrs);
  }
  problem.budget = plan.budget;

  const int m = static_cast<int>(order.size());
  std::optional<IdentificationPlan> accepted;
  auto accept = [&](const std::vector<int>& block_of, int blocks) {
    std::vector<std::vector<Vertex>> groups(blocks);
    for (int i = 0; i < m; ++i) groups[block_of[i]].push_back(order[i]);
    std::erase_if(groups, [](const auto& grp) { return grp.size() < 2; });
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end());
    try {
      contract(g, groups, plan.deleted);
    } catch (const Error& e) {
      if (e.code() == Errc::NonPlanar) return false;
      throw;
    }
    IdentificationPlan found = plan;
    found.groups = std::move(groups);
    accepted = std::move(found);
    return true;
  };

  // Non-crossing partitions first; a walk that revisits vertices gets a
  // second, unrestricted pass guarded by the planarity check alone.
  const std::vector<bool> passes = simple ? std::vector<bool>{true} : std::vector<bool>{true, false};
  for (bool non_crossing : passes) {
    for (int merges = 0; merges < m; ++merges) {
      PartitionSearch search(problem, non_crossing, m - merges, accept);
      if (search.run()) return *accepted;
    }
  }
  throw Error(Errc::PlanNotFound, std::string("no identification plan for ") +
                                      std::string(to_string(cfg.kind)) + " at vertex " +
                                      std::to_string(cfg.center));
}

int class_count(const Graph& g, const IdentificationPlan& plan, Vertex w) {
  std::set<Vertex> deleted(plan.deleted.begin(), plan.deleted.end());
  std::map<Vertex, std::size_t> group_of;
  for (std::size_t i = 0; i < plan.groups.size(); ++i)
    for (Vertex x : plan.groups[i]) group_of[x] = i;
  std::set<std::pair<int, Vertex>> classes;
  for (Vertex x : g.neighbors(w)) {
    if (deleted.count(x)) continue;
    auto it = group_of.find(x);
    classes.insert(it == group_of.end() ? std::pair<int, Vertex>{0, x}
                                        : std::pair<int, Vertex>{1, static_cast<Vertex>(it->second)});
  }
  return static_cast<int>(classes.size());
}

bool groups_non_crossing(const std::vector<Vertex>& walk, const std::vector<std::vector<Vertex>>& groups) {
  auto position = [&](Vertex v) {
    auto it = std::find(walk.begin(), walk.end(), v);
    return it == walk.end() ? -1 : static_cast<int>(it - walk.begin());
  };
  std::vector<std::vector<int>> pos;
  for (const auto& grp : groups) {
    std::vector<int> p;
    for (Vertex v : grp) {
      const int at = position(v);
      if (at < 0) return false;
      p.push_back(at);
    }
    std::sort(p.begin(), p.end());
    pos.push_back(std::move(p));
  }
  // Y avoids crossing X iff all of Y lies in a single arc cut out by X.
  for (std::size_t x = 0; x < pos.size(); ++x)
    for (std::size_t y = 0; y < pos.size(); ++y) {
      if (x == y || pos[x].empty()) continue;
      auto arc = [&](int p) {
        return static_cast<int>(std::upper_bound(pos[x].begin(), pos[x].end(), p) - pos[x].begin()) %
               static_cast<int>(pos[x].size());
      };
      std::set<int> arcs;
      for (int p : pos[y]) arcs.insert(arc(p));
      if (arcs.size() > 1) return false;
    }
  return true;
}

bool plan_is_valid(const Graph& g, const IdentificationPlan& plan, const std::vector<Vertex>& boundary) {
  if (plan.budget.size() != plan.deleted.size()) return false;
  std::set<Vertex> used(plan.deleted.begin(), plan.deleted.end());
  if (used.size() != plan.deleted.size()) return false;
  for (const auto& grp : plan.groups) {
    for (std::size_t i = 0; i < grp.size(); ++i) {
      if (!used.insert(grp[i]).second) return false;
      for (std::size_t j = i + 1; j < grp.size(); ++j)
        if (g.adjacent(grp[i], grp[j])) return false;
    }
  }
  for (std::size_t i = 0; i < plan.deleted.size(); ++i)
    if (class_count(g, plan, plan.deleted[i]) > plan.budget[i]) return false;

  std::set<Vertex> colored;
  for (Vertex d : plan.deleted)
    for (Vertex w : g.neighbors(d))
      if (!std::count(plan.deleted.begin(), plan.deleted.end(), w)) colored.insert(w);
  if (simple_cycle_over(boundary, std::vector<Vertex>(colored.begin(), colored.end())))
    return groups_non_crossing(boundary, plan.groups);
  return true;
}

}  // namespace fold9
