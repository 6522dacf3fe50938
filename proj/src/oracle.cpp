#include "totcol/oracle.hpp"

#include <algorithm>

namespace totcol {

namespace {

TotalColoring total_from_elements(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  std::vector<int> edges(colors.begin() + n, colors.end());
  return make_coloring(g, std::span<const int>(colors.data(), n), edges);
}

OracleOutcome exact_chromatic(const Graph& g, const ConflictModel& model, int lower, bool total,
                              const SearchLimits& limits) {
  auto to_coloring = [&](const std::vector<int>& colors) {
    if (total) return total_from_elements(g, colors);
    TotalColoring c;
    for (int id = 0; id < g.size(); ++id) c.edge_colors.emplace(g.edge(id), colors[id]);
    return c;
  };

  OracleOutcome out;
  const std::vector<int> greedy = greedy_dsatur(model);
  out.upper = greedy.empty() ? 0 : *std::max_element(greedy.begin(), greedy.end());
  out.witness = to_coloring(greedy);
  out.lower = std::min(lower, out.upper);

  for (int palette = out.lower; palette < out.upper; ++palette) {
    SearchLimits budgeted = limits;
    budgeted.node_budget = limits.node_budget > out.nodes ? limits.node_budget - out.nodes : 0;
    SearchOutcome res = color_with_palette(model, palette, {}, budgeted);
    out.nodes += res.nodes;
    switch (res.status) {
      case SearchStatus::Found:
        out.upper = palette;
        out.witness = to_coloring(res.colors);
        return out;
      case SearchStatus::Infeasible:
        out.lower = palette + 1;
        break;
      case SearchStatus::BudgetExhausted:
        out.budget_hit = true;
        return out;
      case SearchStatus::Cancelled:
        out.cancelled = true;
        return out;
    }
  }
  out.lower = out.upper;
  return out;
}

}  // namespace

OracleOutcome total_chromatic_exact(const Graph& g, const SearchLimits& limits) {
  const int lower = g.order() == 0 ? 0 : g.max_degree() + 1;
  return exact_chromatic(g, total_model(g), lower, true, limits);
}

OracleOutcome chromatic_index_exact(const Graph& g, const SearchLimits& limits) {
  return exact_chromatic(g, line_model(g), g.max_degree(), false, limits);
}

CompletionResult complete_coloring(const Graph& g, const TotalColoring& partial, int palette,
                                   const SearchLimits& limits) {
  const int n = g.order();
  std::vector<int> fixed(n + g.size(), 0);
  for (int v = 0; v < n && v < static_cast<int>(partial.vertex_colors.size()); ++v)
    fixed[v] = partial.vertex_colors[v];
  const std::vector<int> edges = edge_color_array(g, partial);
  std::copy(edges.begin(), edges.end(), fixed.begin() + n);

  CompletionResult out;
  SearchOutcome res = color_with_palette(total_model(g), palette, fixed, limits);
  out.status = res.status;
  out.nodes = res.nodes;
  if (res.status == SearchStatus::Found) out.coloring = total_from_elements(g, res.colors);
  return out;
}

}  // namespace totcol
