#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fold9/discharge.hpp"
#include "fold9/error.hpp"
#include "fold9/fractional.hpp"
#include "fold9/generate.hpp"
#include "fold9/homomorphism.hpp"
#include "fold9/io.hpp"
#include "fold9/reducer.hpp"
#include "fold9/triangulate.hpp"

namespace {

constexpr int kInvalidInput = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternal = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw fold9::Error(fold9::Errc::ParseError, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fold9::FoldColoring read_coloring(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return fold9::coloring_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw fold9::Error(fold9::Errc::ParseError, e.what());
    }
  }
  return fold9::parse_coloring(text);
}

fold9::Graph generate(const std::string& name, std::uint64_t seed, int n) {
  using namespace fold9;
  if (name == "icosahedron") return icosahedron();
  if (name == "octahedron") return octahedron();
  if (name == "petersen") return petersen_graph();
  if (name == "wagner") return wagner();
  if (name == "complete") return complete_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "path") return path_graph(n);
  if (name == "triangulation") return gen_triangulation({.seed = seed, .n = n});
  if (name == "triangulation-nosep")
    return gen_triangulation({.seed = seed, .n = n, .avoid_separating_triangles = true});
  if (name == "apollonian") return gen_apollonian(seed, n);
  if (name == "random") return gen_random_planar(seed, n, 60);
  if (name == "sparse") return gen_sparse_planar(seed, n, 50);
  if (name == "cutvertex") return gen_with_cut_vertices(seed, n);
  throw Error(Errc::InvalidParams, "unknown generator '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-fold 9-coloring of planar graphs, with verifiers"};
  app.require_subcommand(1);

  std::string graph_path, coloring_path, gen_name;
  bool json = false, audit = false, exact = false, stats = false, dot = false;
  std::uint64_t seed = 1;
  int n = 12, kn = 9, kk = 2;

  auto* color_cmd = app.add_subcommand("color", "print a 2-fold 9-coloring of a planar graph");
  color_cmd->add_option("FILE", graph_path, "edge list ('-' for stdin)")->required();
  color_cmd->add_flag("--json", json, "JSON output");
  color_cmd->add_flag("--dot", dot, "Graphviz output with color labels");

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
  verify_cmd->add_option("FILE", graph_path, "edge list")->required();
  verify_cmd->add_option("COLORING", coloring_path, "coloring (text or JSON)")->required();

  auto* discharge_cmd = app.add_subcommand("discharge", "run the discharging rules");
  discharge_cmd->add_option("FILE", graph_path, "edge list of a graph with minimum degree 5")->required();
  discharge_cmd->add_flag("--json", json, "JSON output");
  discharge_cmd->add_flag("--audit", audit, "also list negative vertices and nearby configurations");

  auto* chif_cmd = app.add_subcommand("chif", "exact fractional chromatic number");
  chif_cmd->add_option("FILE", graph_path, "edge list")->required();

  auto* kneser_cmd = app.add_subcommand("kneser", "Kneser graph constants");
  kneser_cmd->add_option("N", kn)->required();
  kneser_cmd->add_option("K", kk)->required();
  kneser_cmd->add_flag("--stats", stats, "print vertex/edge counts and clique number");
  kneser_cmd->add_flag("--exact", exact, "also compute the chromatic number");

  auto* gen_cmd = app.add_subcommand("gen", "print a generated graph as an edge list");
  gen_cmd->add_option("NAME", gen_name,
                      "icosahedron|octahedron|petersen|wagner|complete|cycle|path|triangulation|"
                      "triangulation-nosep|apollonian|random|sparse|cutvertex")
      ->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    using namespace fold9;
    if (*color_cmd) {
      const Graph g = parse_edge_list(slurp(graph_path));
      const FoldColoring c = color(g);
      if (json)
        std::cout << coloring_to_json(c).dump(2) << '\n';
      else if (dot)
        std::cout << to_dot(g, c);
      else
        std::cout << write_coloring(c);
    } else if (*verify_cmd) {
      const Graph g = parse_edge_list(slurp(graph_path));
      const FoldColoring c = read_coloring(coloring_path);
      if (static_cast<int>(c.sets.size()) != g.vertex_count()) {
        std::cout << "invalid: coloring covers " << c.sets.size() << " of " << g.vertex_count()
                  << " vertices\n";
        return kVerifyFailed;
      }
      if (!verify_fold_coloring(g, c)) {
        std::cout << "invalid: not a proper " << c.fold << "-fold " << c.palette << "-coloring\n";
        return kVerifyFailed;
      }
      const KneserGraph target = kneser(c.palette, c.fold);
      if (!verify_hom(g, coloring_to_hom(c, target), target.graph)) {
        std::cout << "invalid: not a homomorphism into K_{" << c.palette << ":" << c.fold << "}\n";
        return kVerifyFailed;
      }
      std::cout << "valid\n";
    } else if (*discharge_cmd) {
      Graph g = parse_edge_list(slurp(graph_path));
      if (audit) {
        const AuditReport report = fold9::audit(compute_embedding(g));
        if (json) {
          auto out = ledger_to_json(report.ledger);
          out["negative"] = report.negative;
          nlohmann::json configs = nlohmann::json::array();
          for (const auto& cfg : report.configurations)
            configs.push_back({{"kind", to_string(cfg.kind)}, {"center", cfg.center}, {"leaves", cfg.leaves}});
          out["configurations"] = configs;
          nlohmann::json flags = nlohmann::json::array();
          for (const auto& f : report.flags) flags.push_back(f.vertex);
          out["flags"] = flags;
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << write_ledger(report.ledger);
          for (Vertex v : report.negative)
            std::cout << "negative " << v << ' ' << report.ledger.final_charge[v].str() << '\n';
          for (const auto& cfg : report.configurations) {
            std::cout << "configuration " << to_string(cfg.kind) << ' ' << cfg.center;
            for (Vertex u : cfg.leaves) std::cout << ' ' << u;
            std::cout << '\n';
          }
          for (const auto& f : report.flags) std::cout << "flag " << f.vertex << '\n';
        }
        if (!report.flags.empty()) return kInternal;
      } else {
        const ChargeLedger ledger = apply_rules(g);
        if (json)
          std::cout << ledger_to_json(ledger).dump(2) << '\n';
        else
          std::cout << write_ledger(ledger);
      }
    } else if (*chif_cmd) {
      const Graph g = parse_edge_list(slurp(graph_path));
      const FractionalSolution sol = chi_f_solve(g);
      std::cout << to_string(sol.value) << '\n';
      for (const auto& e : sol.weights.entries) {
        std::cout << to_string(e.weight) << ':';
        for (Vertex v : e.set) std::cout << ' ' << v;
        std::cout << '\n';
      }
    } else if (*kneser_cmd) {
      const KneserGraph k = kneser(kn, kk);
      std::cout << "vertices " << k.graph.vertex_count() << '\n';
      std::cout << "edges " << k.graph.edge_count() << '\n';
      if (stats || exact) std::cout << "omega " << clique_number(k.graph) << '\n';
      if (exact) std::cout << "chi " << chromatic_number(k.graph) << '\n';
    } else if (*gen_cmd) {
      std::cout << write_edge_list(generate(gen_name, seed, n));
    }
  } catch (const fold9::Error& e) {
    std::cerr << "error: " << fold9::to_string(e.code()) << ": " << e.what() << '\n';
    return e.is_internal() ? kInternal : kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return 0;
}
