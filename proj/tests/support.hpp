// Independent reference implementations for tests. Nothing here shares code
// with the library beyond the Graph and TotalColoring containers.
#pragma once

#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "totcol/coloring.hpp"
#include "totcol/graph.hpp"
#include "totcol/io.hpp"

namespace support {

using totcol::Edge;
using totcol::Graph;
using totcol::TotalColoring;

inline totcol::ColorMatrix fixture(const std::string& name) {
  std::ifstream in(std::string(TOTCOL_FIXTURES) + "/" + name + ".csv");
  if (!in) throw std::runtime_error("missing fixture " + name);
  return totcol::io::matrix_from_csv(in);
}

// Elements of a total coloring as (u, v) with v == -1 for a vertex.
struct Item {
  int u, v, color;
};

inline std::vector<Item> items(const Graph& g, const TotalColoring& c) {
  std::vector<Item> out;
  for (int v = 0; v < g.order(); ++v) out.push_back({v, -1, v < (int)c.vertex_colors.size() ? c.vertex_colors[v] : 0});
  for (const Edge& e : g.edges()) {
    auto it = c.edge_colors.find(e);
    out.push_back({e.u, e.v, it == c.edge_colors.end() ? 0 : it->second});
  }
  return out;
}

// Two elements conflict when they are adjacent vertices, edges sharing an end,
// or a vertex and an edge at it.
inline bool related(const Graph& g, const Item& a, const Item& b) {
  if (a.v < 0 && b.v < 0) return g.adjacent(a.u, b.u);
  if (a.v >= 0 && b.v >= 0) return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  const Item& x = a.v < 0 ? a : b;
  const Item& e = a.v < 0 ? b : a;
  return x.u == e.u || x.u == e.v;
}

// Naive double loop: every element colored, every edge key real, no related pair equal.
inline bool naive_valid(const Graph& g, const TotalColoring& c) {
  if ((int)c.vertex_colors.size() != g.order()) return false;
  for (const auto& [e, col] : c.edge_colors)
    if (e.u >= e.v || e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
  const auto all = items(g, c);
  for (const Item& x : all)
    if (x.color <= 0) return false;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].color == all[j].color && related(g, all[i], all[j])) return false;
  return true;
}

// Plain backtracking in element order, no heuristics: does a coloring with
// `palette` colors exist? `edges_only` colors just the edges.
inline bool brute_colorable(const Graph& g, int palette, bool edges_only) {
  std::vector<Item> all;
  if (!edges_only)
    for (int v = 0; v < g.order(); ++v) all.push_back({v, -1, 0});
  for (const Edge& e : g.edges()) all.push_back({e.u, e.v, 0});
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == all.size()) return true;
    for (int c = 1; c <= palette; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !(all[j].color == c && related(g, all[i], all[j]));
      if (!ok) continue;
      all[i].color = c;
      if (rec(i + 1)) return true;
      all[i].color = 0;
    }
    return false;
  };
  return rec(0);
}

inline int brute_total_chromatic(const Graph& g) {
  int p = 1;
  while (!brute_colorable(g, p, false)) ++p;
  return p;
}

inline int brute_chromatic_index(const Graph& g) {
  int p = 0;
  while (!brute_colorable(g, p, true)) ++p;
  return p;
}

inline bool proper_edge_coloring(const Graph& g, const std::vector<int>& colors) {
  if ((int)colors.size() != g.size()) return false;
  for (int a = 0; a < g.size(); ++a) {
    if (colors[a] <= 0) return false;
    for (int b = a + 1; b < g.size(); ++b) {
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      const bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      if (touch && colors[a] == colors[b]) return false;
    }
  }
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline int gcd_count_phi(int n) {
  int count = 0;
  for (int a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++count;
  return count;
}

}  // namespace support
