#include "totcol/coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "totcol/error.hpp"

namespace totcol {

int TotalColoring::palette() const {
  int best = 0;
  for (int c : vertex_colors) best = std::max(best, c);
  for (const auto& [e, c] : edge_colors) best = std::max(best, c);
  return best;
}

int TotalColoring::colors_used() const {
  std::set<int> seen;
  for (int c : vertex_colors)
    if (c > 0) seen.insert(c);
  for (const auto& [e, c] : edge_colors)
    if (c > 0) seen.insert(c);
  return static_cast<int>(seen.size());
}

TotalColoring make_coloring(const Graph& g, std::span<const int> vertex_colors, std::span<const int> edge_colors) {
  if (static_cast<int>(vertex_colors.size()) != g.order() || static_cast<int>(edge_colors.size()) != g.size())
    throw precondition_error("color arrays do not match the graph");
  TotalColoring c;
  c.vertex_colors.assign(vertex_colors.begin(), vertex_colors.end());
  for (int id = 0; id < g.size(); ++id)
    if (edge_colors[id] > 0) c.edge_colors.emplace(g.edge(id), edge_colors[id]);
  return c;
}

std::vector<int> edge_color_array(const Graph& g, const TotalColoring& c) {
  std::vector<int> out(g.size(), 0);
  for (int id = 0; id < g.size(); ++id)
    if (auto it = c.edge_colors.find(g.edge(id)); it != c.edge_colors.end()) out[id] = it->second;
  return out;
}

ColorMatrix ColorMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  ColorMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw precondition_error("color matrix rows must form a square");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] < 0) throw precondition_error("negative color matrix entry");
      if (rows[i][j] != rows[j].at(i))
        throw precondition_error("color matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      m.cells_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void ColorMatrix::set(int i, int j, int color) {
  cells_[static_cast<std::size_t>(i) * n_ + j] = color;
  cells_[static_cast<std::size_t>(j) * n_ + i] = color;
}

std::vector<std::vector<int>> ColorMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  return out;
}

TotalColoring matrix_to_coloring(const Graph& g, const ColorMatrix& m) {
  const int n = g.order();
  if (m.size() != n)
    throw precondition_error("matrix size " + std::to_string(m.size()) + " does not match graph order " +
                             std::to_string(n));
  TotalColoring c;
  c.vertex_colors.resize(n);
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) <= 0) throw precondition_error("cell (" + std::to_string(i) + "," + std::to_string(i) + ") has no vertex color");
    c.vertex_colors[i] = m.at(i, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.at(i, j) != m.at(j, i))
        throw precondition_error("cell (" + std::to_string(i) + "," + std::to_string(j) + ") breaks symmetry");
      const bool edge = g.adjacent(i, j);
      if (edge != (m.at(i, j) > 0))
        throw precondition_error("cell (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                                 (edge ? "is blank but the vertices are adjacent" : "is colored but the vertices are not adjacent"));
      if (edge && i < j) c.edge_colors.emplace(Edge{i, j}, m.at(i, j));
    }
  }
  return c;
}

ColorMatrix coloring_to_matrix(const Graph& g, const TotalColoring& c) {
  ColorMatrix m(g.order());
  for (int v = 0; v < g.order() && v < static_cast<int>(c.vertex_colors.size()); ++v) m.set(v, v, c.vertex_colors[v]);
  for (const auto& [e, color] : c.edge_colors)
    if (e.u >= 0 && e.v < g.order() && g.adjacent(e.u, e.v)) m.set(e.u, e.v, color);
  return m;
}

}  // namespace totcol
