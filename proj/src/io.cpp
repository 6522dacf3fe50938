#include "totcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "totcol/error.hpp"

namespace totcol::io {

json graph_to_json(const Graph& g, const std::vector<std::vector<int>>& labels) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json j{{"n", g.order()}, {"edges", std::move(edges)}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw parse_error("edge entries must be [u, v] pairs");
      edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return Graph(n, std::move(edges));
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad graph JSON: ") + ex.what());
  }
}

std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph graph_from_dimacs(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      int m = 0;
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0)
        throw parse_error("line " + std::to_string(line_no) + ": bad problem line");
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0) throw parse_error("line " + std::to_string(line_no) + ": edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw parse_error("line " + std::to_string(line_no) + ": bad edge line");
      if (u == v) throw parse_error("line " + std::to_string(line_no) + ": self-loop");
      edges.push_back(make_edge(u - 1, v - 1));
    } else {
      throw parse_error("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw parse_error("missing problem line");
  // DIMACS files often list both orientations of an edge.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

json coloring_to_json(const Graph& g, const TotalColoring& c) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    auto it = c.edge_colors.find(e);
    edges.push_back({e.u, e.v, it == c.edge_colors.end() ? 0 : it->second});
  }
  return json{{"vertices", c.vertex_colors}, {"edges", std::move(edges)}};
}

TotalColoring coloring_from_json(const json& j) {
  try {
    TotalColoring c;
    c.vertex_colors = j.at("vertices").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw parse_error("edge entries must be [u, v, color]");
      const Edge key{std::min(e[0].get<int>(), e[1].get<int>()), std::max(e[0].get<int>(), e[1].get<int>())};
      if (!c.edge_colors.emplace(key, e[2].get<int>()).second)
        throw parse_error("edge {" + std::to_string(key.u) + "," + std::to_string(key.v) + "} listed twice");
    }
    return c;
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad coloring JSON: ") + ex.what());
  }
}

std::string matrix_to_csv(const ColorMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out << (j ? "," : "") << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

ColorMatrix matrix_from_csv(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<int> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(cell, &used));
        if (cell.find_first_not_of(" \r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw parse_error("bad matrix cell '" + cell + "' in row " + std::to_string(rows.size()));
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return ColorMatrix::from_rows(rows);
  } catch (const precondition_error& ex) {
    throw parse_error(ex.what());
  }
}

std::string latin_to_csv(const LatinSquare& sq) {
  std::ostringstream out;
  for (const auto& row : sq.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
  return out.str();
}

json envelope_to_json(const ConstructionResult& r) {
  return json{{"method", r.method}, {"budget", r.budget}, {"colors_used", r.colors_used}, {"notes", r.notes}};
}

json report_to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    json witnesses = json::array();
    for (const Element& e : v.witnesses) witnesses.push_back(e.is_vertex() ? json{e.u} : json{e.u, e.v});
    violations.push_back({{"kind", to_string(v.kind)}, {"witnesses", std::move(witnesses)}});
  }
  return json{{"valid", r.is_valid()}, {"colors_used", r.colors_used}, {"violations", std::move(violations)}};
}

json oracle_to_json(const OracleOutcome& r) {
  json j{{"lower", r.lower}, {"upper", r.upper}, {"nodes", r.nodes}, {"budget_hit", r.budget_hit}};
  if (r.exact()) j["value"] = r.value();
  return j;
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const SweepRow& r : rows) {
    out.push_back({{"n", r.n},
                   {"k", r.k},
                   {"delta", r.delta},
                   {"chi_total_lo", r.lower},
                   {"chi_total_hi", r.upper},
                   {"predicted", r.predicted},
                   {"agrees", r.agrees ? json(*r.agrees) : json("unknown")},
                   {"nodes", r.nodes}});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << content;
}

}  // namespace totcol::io
