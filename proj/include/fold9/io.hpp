#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fold9/color_set.hpp"
#include "fold9/discharge.hpp"
#include "fold9/graph.hpp"

namespace fold9 {

/// `n m`, then m lines `u v`; lines starting with `#` are comments.
/// Throws ParseError.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// One line `v: w1 ... wk` per vertex giving its clockwise rotation.
Graph parse_rotation(std::string_view text);
std::string write_rotation(const Graph& g);

/// Header `fold=T palette=S`, then `v: c1 ... ct` per vertex.
FoldColoring parse_coloring(std::string_view text);
std::string write_coloring(const FoldColoring& c);

nlohmann::json coloring_to_json(const FoldColoring& c);
FoldColoring coloring_from_json(const nlohmann::json& j);

std::string to_dot(const Graph& g, const std::optional<FoldColoring>& coloring = std::nullopt);

std::string write_ledger(const ChargeLedger& ledger);
nlohmann::json ledger_to_json(const ChargeLedger& ledger);

}  // namespace fold9
