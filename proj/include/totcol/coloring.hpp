#pragma once

#include <map>
#include <span>
#include <vector>

#include "totcol/graph.hpp"

namespace totcol {

/// Colors are positive integers; 0 means "no color".
struct TotalColoring {
  std::vector<int> vertex_colors;
  std::map<Edge, int> edge_colors;

  /// Largest color used anywhere (0 when nothing is colored).
  int palette() const;
  /// Number of distinct colors across vertices and edges.
  int colors_used() const;

  bool operator==(const TotalColoring&) const = default;
};

/// Builds a coloring of `g` from per-vertex and per-edge-id color arrays.
TotalColoring make_coloring(const Graph& g, std::span<const int> vertex_colors, std::span<const int> edge_colors);

/// Per-edge-id colors of `c` for the edges of `g` (0 where absent).
std::vector<int> edge_color_array(const Graph& g, const TotalColoring& c);

/// Symmetric n x n matrix: diagonal holds vertex colors, (i, j) the color of
/// edge {i, j}, and 0 marks "no entry".
class ColorMatrix {
 public:
  ColorMatrix() = default;
  explicit ColorMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}
  /// Throws precondition_error unless the rows form a symmetric square.
  static ColorMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  /// Sets (i, j) and (j, i).
  void set(int i, int j, int color);

  std::vector<std::vector<int>> rows() const;
  bool operator==(const ColorMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// Requires the off-diagonal support of `m` to equal the adjacency of `g` and a
/// fully colored diagonal; throws precondition_error naming the first bad cell.
TotalColoring matrix_to_coloring(const Graph& g, const ColorMatrix& m);

/// Cells without a color stay 0.
ColorMatrix coloring_to_matrix(const Graph& g, const TotalColoring& c);

}  // namespace totcol
