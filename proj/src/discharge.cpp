#include "fold9/discharge.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fold9/error.hpp"
#include "fold9/triangulate.hpp"

namespace fold9 {

std::string Quarter::str() const {
  long long num = units;
  long long den = 4;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (num == 0) return "0";
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(NeighborRole role) {
  switch (role) {
    case NeighborRole::Isolated: return "isolated";
    case NeighborRole::Crowded: return "crowded";
    case NeighborRole::Plain: return "plain";
    case NeighborRole::Receiver: return "receiver";
    case NeighborRole::None: return "none";
  }
  return "unknown";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "R?";
}

namespace {

void require_min_degree(const Graph& g) {
  if (g.vertex_count() > 0 && g.min_degree() < 5)
    throw Error(Errc::MinDegreeViolation, "minimum degree " + std::to_string(g.min_degree()) + " < 5");
}

}  // namespace

HvSubgraph build_hv(const Graph& g, Vertex v) {
  HvSubgraph hv;
  hv.center = v;
  for (Vertex w : g.neighbors(v))
    if (g.degree(w) == 5 || g.degree(w) == 6) hv.members.push_back(w);
  hv.graph = induced_subgraph(g, hv.members);
  return hv;
}

NeighborRole NeighborClass::role_of(Vertex w) const {
  auto it = std::find(neighbors.begin(), neighbors.end(), w);
  return it == neighbors.end() ? NeighborRole::None : roles[it - neighbors.begin()];
}

NeighborClass classify(const Graph& g, Vertex v) {
  require_min_degree(g);
  const HvSubgraph hv = build_hv(g, v);
  NeighborClass out;
  out.center = v;
  for (Vertex w : g.neighbors(v)) {
    out.neighbors.push_back(w);
    NeighborRole role = NeighborRole::None;
    if (g.degree(w) == 6) {
      role = NeighborRole::Receiver;
    } else if (g.degree(w) == 5) {
      const Vertex local =
          static_cast<Vertex>(std::find(hv.members.begin(), hv.members.end(), w) - hv.members.begin());
      const auto inside = hv.graph.neighbors(local);
      const auto six_inside = std::count_if(inside.begin(), inside.end(), [&](Vertex x) {
        return g.degree(hv.members[x]) == 6;
      });
      if (inside.empty())
        role = NeighborRole::Isolated;
      else if (six_inside >= 2)
        role = NeighborRole::Crowded;
      else
        role = NeighborRole::Plain;
    }
    out.roles.push_back(role);
  }
  return out;
}

Quarter ChargeLedger::total_initial() const {
  return std::accumulate(initial.begin(), initial.end(), Quarter{});
}

Quarter ChargeLedger::total_final() const {
  return std::accumulate(final_charge.begin(), final_charge.end(), Quarter{});
}

ChargeLedger apply_rules(const Graph& g) {
  require_min_degree(g);
  const int n = g.vertex_count();
  ChargeLedger ledger;
  ledger.initial.resize(n);
  for (Vertex v = 0; v < n; ++v) ledger.initial[v] = Quarter{4LL * (g.degree(v) - 6)};

  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 6) continue;
    const NeighborClass cls = classify(g, v);
    for (std::size_t i = 0; i < cls.neighbors.size(); ++i) {
      const Vertex w = cls.neighbors[i];
      const NeighborRole role = cls.roles[i];
      auto give = [&](long long quarters, Rule rule) {
        if (quarters > 0) ledger.transfers.push_back({v, w, Quarter{quarters}, rule});
      };
      if (d == 6) {
        if (g.degree(w) == 5) give(2, Rule::R4);
        continue;
      }
      if (role == NeighborRole::Receiver) {
        give(1, Rule::R3);
      } else if (g.degree(w) == 5) {
        const Rule rule = d >= 8 ? Rule::R1 : Rule::R2;
        if (role == NeighborRole::Isolated)
          give(2, rule);
        else if (role == NeighborRole::Crowded && d == 7)
          give(0, rule);
        else
          give(1, rule);
      }
    }
  }

  ledger.final_charge = ledger.initial;
  for (const Transfer& t : ledger.transfers) {
    ledger.final_charge[t.from] = ledger.final_charge[t.from] - t.amount;
    ledger.final_charge[t.to] = ledger.final_charge[t.to] + t.amount;
  }
  return ledger;
}

AuditReport audit(const Graph& g) {
  if (!is_triangulation(g)) throw Error(Errc::PreconditionViolation, "not an embedded triangulation");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 5)
      throw Error(Errc::PreconditionViolation,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  if (auto sep = find_separating_clique(g, 3))
    throw Error(Errc::PreconditionViolation, "separating triangle at " + std::to_string((*sep)[0]) +
                                                 "," + std::to_string((*sep)[1]) + "," +
                                                 std::to_string((*sep)[2]));

  AuditReport report;
  report.ledger = apply_rules(g);
  if (report.ledger.total_initial() != Quarter{-48})
    throw Error(Errc::InternalReductionFailure, "initial charge does not sum to -12");
  if (report.ledger.total_final() != report.ledger.total_initial())
    throw Error(Errc::InternalReductionFailure, "discharging changed the total charge");

  std::set<Vertex> centers_seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (report.ledger.final_charge[v] >= Quarter{0}) continue;
    report.negative.push_back(v);
    std::vector<Vertex> near{v};
    near.insert(near.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    bool any = false;
    for (Vertex c : near) {
      auto found = configurations_at(g, c);
      any = any || !found.empty();
      if (centers_seen.insert(c).second)
        report.configurations.insert(report.configurations.end(), found.begin(), found.end());
    }
    if (!any) report.flags.push_back({v, g.degree(v), report.ledger.final_charge[v]});
  }
  return report;
}

}  // namespace fold9
