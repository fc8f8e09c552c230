#pragma once

#include <string>
#include <vector>

#include "fold9/configuration.hpp"
#include "fold9/graph.hpp"

namespace fold9 {

/// Charge measured in quarters: Quarter{-3} is -3/4.
struct Quarter {
  long long units = 0;

  /// "-1", "1/2", "-3/4", "0".
  std::string str() const;

  friend Quarter operator+(Quarter a, Quarter b) { return {a.units + b.units}; }
  friend Quarter operator-(Quarter a, Quarter b) { return {a.units - b.units}; }
  friend auto operator<=>(Quarter, Quarter) = default;
};

/// Subgraph induced by the 5- and 6-neighbors of a vertex. `members` are
/// vertices of the host graph; `graph` uses their positions as ids.
struct HvSubgraph {
  Vertex center = -1;
  std::vector<Vertex> members;
  Graph graph;
};

HvSubgraph build_hv(const Graph& g, Vertex v);

enum class NeighborRole { Isolated, Crowded, Plain, Receiver, None };

std::string_view to_string(NeighborRole role);

/// Role of each neighbor of `center`, parallel to g.neighbors(center).
/// 5-neighbors are isolated (no neighbor inside H_v), crowded (not isolated,
/// with two 6-neighbors inside H_v) or plain; 6-neighbors are receivers;
/// everything else is None.
struct NeighborClass {
  Vertex center = -1;
  std::vector<Vertex> neighbors;
  std::vector<NeighborRole> roles;

  NeighborRole role_of(Vertex w) const;
};

/// Throws MinDegreeViolation when δ(g) < 5.
NeighborClass classify(const Graph& g, Vertex v);

enum class Rule { R1, R2, R3, R4 };

std::string_view to_string(Rule rule);

struct Transfer {
  Vertex from = -1;
  Vertex to = -1;
  Quarter amount;
  Rule rule = Rule::R1;
};

/// Initial charge d(v) - 6 per vertex, the transfers of rules R1-R4 computed
/// simultaneously from the initial state, and the resulting final charge.
struct ChargeLedger {
  std::vector<Quarter> initial;
  std::vector<Transfer> transfers;
  std::vector<Quarter> final_charge;

  Quarter total_initial() const;
  Quarter total_final() const;
};

/// R1: an 8⁺-vertex gives 1/2 to each isolated and 1/4 to each non-isolated
///     5-neighbor.
/// R2: a 7-vertex gives 1/2 to each isolated, 0 to each crowded and 1/4 to
///     every other 5-neighbor.
/// R3: a 7⁺-vertex gives 1/4 to each 6-neighbor.
/// R4: a 6-vertex gives 1/2 to each 5-neighbor.
/// Throws MinDegreeViolation when δ(g) < 5.
ChargeLedger apply_rules(const Graph& g);

struct AuditFlag {
  Vertex vertex = -1;
  int degree = 0;
  Quarter final_charge;
};

struct AuditReport {
  ChargeLedger ledger;
  std::vector<Vertex> negative;  ///< vertices with negative final charge
  /// Configurations centered at a negative vertex or one of its neighbors.
  std::vector<Configuration> configurations;
  /// Negative vertices with no configuration centered within distance 1.
  /// The case analysis predicts none.
  std::vector<AuditFlag> flags;
};

/// Runs the rules on a triangulation with δ >= 5 and no separating triangle
/// (PreconditionViolation naming the offending feature otherwise) and
/// collects the configurations that must be present near the vertices left
/// with negative charge.
AuditReport audit(const Graph& g);

}  // namespace fold9
