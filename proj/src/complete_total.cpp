#include "totcol/complete_total.hpp"

#include <string>
#include <vector>

#include "totcol/error.hpp"

namespace totcol {

namespace {

// 0-based colors of K_n for even n, as a symmetric matrix with the vertex colors on the diagonal.
std::vector<std::vector<int>> hinz_parisse_even(int n) {
  auto tau = [n](int k, int x) { return x == k ? n - 1 : x == n - 1 ? k : x; };
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = i;
    for (int j = 0; j < n; ++j)
      if (i != j) c[i][j] = (tau(i, j) + tau(j, i) + 2) % (n + 1);
  }
  return c;
}

}  // namespace

TotalColoring complete_total(int n) {
  if (n < 1) throw precondition_error("complete_total requires n >= 1");
  const bool odd = n % 2 == 1;
  const int even_part = odd ? n - 1 : n;
  std::vector<std::vector<int>> c = hinz_parisse_even(even_part);

  if (odd) {
    // Palette {0..n-1}: each line k of K_{n-1} has n-1 colored elements, so exactly one color is free.
    const int last = n - 1;
    for (auto& row : c) row.push_back(0);
    c.emplace_back(n, 0);
    std::vector<bool> edge_used(n, false);
    for (int k = 0; k < last; ++k) {
      std::vector<bool> seen(n, false);
      for (int j = 0; j < last; ++j) seen[c[k][j]] = true;
      int missing = 0;
      while (seen[missing]) ++missing;
      c[k][last] = c[last][k] = missing;
      edge_used[missing] = true;
    }
    int free = 0;
    while (free < n && edge_used[free]) ++free;
    if (free == n) throw construction_error("no color left for the last vertex of K_" + std::to_string(n));
    c[last][last] = free;
  }

  TotalColoring out;
  out.vertex_colors.resize(n);
  for (int i = 0; i < n; ++i) {
    out.vertex_colors[i] = c[i][i] + 1;
    for (int j = i + 1; j < n; ++j) out.edge_colors.emplace(Edge{i, j}, c[i][j] + 1);
  }
  return out;
}

}  // namespace totcol
