#include "fold9/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "fold9/error.hpp"

namespace fold9 {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    const auto raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& why) {
  throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": " + why);
}

std::vector<long long> integers(const Line& line, std::string_view text) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != '\t'))
      fail(line, "expected integers, got '" + std::string(text) + "'");
    i = ptr - text.data();
    out.push_back(value);
  }
  return out;
}

/// Splits `v: rest`.
std::pair<long long, std::string_view> keyed(const Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string_view::npos) fail(line, "expected 'v: ...'");
  const auto key = integers(line, line.text.substr(0, colon));
  if (key.size() != 1) fail(line, "expected a single vertex id before ':'");
  return {key[0], line.text.substr(colon + 1)};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty input");
  const auto header = integers(lines[0], lines[0].text);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) fail(lines[0], "header must be 'n m'");
  const long long n = header[0];
  const long long m = header[1];
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw Error(Errc::ParseError, "header promises " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = integers(lines[i], lines[i].text);
    if (uv.size() != 2) fail(lines[i], "expected 'u v'");
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n || uv[0] == uv[1])
      fail(lines[i], "bad edge " + std::to_string(uv[0]) + " " + std::to_string(uv[1]));
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_rotation(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<std::vector<Vertex>> rotation(lines.size());
  std::vector<char> seen(lines.size(), 0);
  for (const Line& line : lines) {
    const auto [v, rest] = keyed(line);
    if (v < 0 || v >= static_cast<long long>(lines.size()) || seen[v])
      fail(line, "vertex ids must be 0..n-1, each once");
    seen[v] = 1;
    for (long long w : integers(line, rest)) {
      if (w < 0 || w >= static_cast<long long>(lines.size())) fail(line, "neighbor out of range");
      rotation[v].push_back(static_cast<Vertex>(w));
    }
  }
  try {
    return Graph::from_rotation(std::move(rotation));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string write_rotation(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : g.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

FoldColoring parse_coloring(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty coloring");
  FoldColoring c;
  int fold = -1;
  int palette = -1;
  {
    std::istringstream header{std::string(lines[0].text)};
    std::string token;
    while (header >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) fail(lines[0], "expected 'fold=T palette=S'");
      const auto value = integers(lines[0], std::string_view(token).substr(eq + 1));
      if (value.size() != 1) fail(lines[0], "bad header value");
      const auto key = token.substr(0, eq);
      if (key == "fold")
        fold = static_cast<int>(value[0]);
      else if (key == "palette")
        palette = static_cast<int>(value[0]);
      else
        fail(lines[0], "unknown header key '" + key + "'");
    }
  }
  if (fold < 1 || palette < fold || palette > ColorSet::kMaxColor) fail(lines[0], "bad fold/palette");
  c.fold = fold;
  c.palette = palette;
  c.sets.resize(lines.size() - 1);
  std::vector<char> seen(c.sets.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [v, rest] = keyed(lines[i]);
    if (v < 0 || v >= static_cast<long long>(c.sets.size()) || seen[v])
      fail(lines[i], "vertex ids must be 0..n-1, each once");
    seen[v] = 1;
    for (long long color : integers(lines[i], rest)) {
      if (color < 1 || color > palette) fail(lines[i], "color out of range");
      if (c.sets[v].contains(static_cast<int>(color))) fail(lines[i], "repeated color");
      c.sets[v].insert(static_cast<int>(color));
    }
  }
  return c;
}

std::string write_coloring(const FoldColoring& c) {
  std::ostringstream out;
  out << "fold=" << c.fold << " palette=" << c.palette << '\n';
  for (std::size_t v = 0; v < c.sets.size(); ++v) {
    out << v << ':';
    for (int color : c.sets[v].to_vector()) out << ' ' << color;
    out << '\n';
  }
  return out.str();
}

nlohmann::json coloring_to_json(const FoldColoring& c) {
  nlohmann::json sets = nlohmann::json::array();
  for (ColorSet s : c.sets) sets.push_back(s.to_vector());
  return {{"fold", c.fold}, {"palette", c.palette}, {"colors", sets}};
}

FoldColoring coloring_from_json(const nlohmann::json& j) {
  try {
    FoldColoring c;
    c.fold = j.at("fold").get<int>();
    c.palette = j.at("palette").get<int>();
    if (c.fold < 1 || c.palette < c.fold || c.palette > ColorSet::kMaxColor)
      throw Error(Errc::ParseError, "bad fold/palette");
    for (const auto& list : j.at("colors")) {
      ColorSet s;
      for (int color : list.get<std::vector<int>>()) {
        if (color < 1 || color > c.palette || s.contains(color))
          throw Error(Errc::ParseError, "bad color " + std::to_string(color));
        s.insert(color);
      }
      c.sets.push_back(s);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string to_dot(const Graph& g, const std::optional<FoldColoring>& coloring) {
  static constexpr const char* kTones[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
                                           "#911eb4", "#46f0f0", "#f032e6", "#bcf60c"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (coloring && v < static_cast<Vertex>(coloring->sets.size())) {
      const ColorSet s = coloring->sets[v];
      out << " [label=\"" << s.str() << "\", style=wedged, fillcolor=\"";
      bool first = true;
      for (int c : s.to_vector()) {
        if (!first) out << ':';
        out << kTones[(c - 1) % 9];
        first = false;
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_ledger(const ChargeLedger& ledger) {
  std::ostringstream out;
  out << "# vertex initial final\n";
  for (std::size_t v = 0; v < ledger.initial.size(); ++v)
    out << "charge " << v << ' ' << ledger.initial[v].str() << ' ' << ledger.final_charge[v].str() << '\n';
  out << "# rule from to amount\n";
  for (const Transfer& t : ledger.transfers)
    out << "transfer " << to_string(t.rule) << ' ' << t.from << ' ' << t.to << ' ' << t.amount.str() << '\n';
  out << "total initial " << ledger.total_initial().str() << '\n';
  out << "total final " << ledger.total_final().str() << '\n';
  return out.str();
}

nlohmann::json ledger_to_json(const ChargeLedger& ledger) {
  nlohmann::json charges = nlohmann::json::array();
  for (std::size_t v = 0; v < ledger.initial.size(); ++v)
    charges.push_back({{"vertex", v}, {"initial", ledger.initial[v].str()}, {"final", ledger.final_charge[v].str()}});
  nlohmann::json transfers = nlohmann::json::array();
  for (const Transfer& t : ledger.transfers)
    transfers.push_back(
        {{"rule", to_string(t.rule)}, {"from", t.from}, {"to", t.to}, {"amount", t.amount.str()}});
  return {{"charges", charges},
          {"transfers", transfers},
          {"total_initial", ledger.total_initial().str()},
          {"total_final", ledger.total_final().str()}};
}

}  // namespace fold9
