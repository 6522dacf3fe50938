#include <algorithm>
#include <numeric>
#include <string>

#include "totcol/complete_total.hpp"
#include "totcol/constructions.hpp"
#include "totcol/error.hpp"
#include "totcol/oracle.hpp"
#include "totcol/verify.hpp"

namespace totcol {

namespace {

// Induced subgraph on vertices 0..k-1 (prefixes keep their labels).
Graph prefix_graph(const Graph& g, int k) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.v < k) edges.push_back(e);
  return Graph(k, std::move(edges));
}

// Colors the prefix graph h from a total coloring of K_{h.order()} whose vertex
// `label[v]` is h's vertex v, dropping the edges h lacks.
TotalColoring restrict_complete(const Graph& h, const TotalColoring& complete, const std::vector<int>& label) {
  TotalColoring c;
  c.vertex_colors.resize(h.order());
  for (int v = 0; v < h.order(); ++v) c.vertex_colors[v] = complete.vertex_colors[label[v]];
  for (const Edge& e : h.edges()) c.edge_colors.emplace(e, complete.edge_colors.at(make_edge(label[e.u], label[e.v])));
  return c;
}

int smallest_absent(const std::vector<int>& used) {
  int c = 1;
  while (std::find(used.begin(), used.end(), c) != used.end()) ++c;
  return c;
}

}  // namespace

ConstructionResult mock_threshold_total(const Graph& g, const MockThresholdScript& script,
                                        std::uint64_t search_budget) {
  validate_script(script);
  if (!(build_mock_threshold(script) == g)) throw precondition_error("graph does not match the mock threshold script");

  ConstructionResult out;
  out.graph = g;
  out.method = "mock-threshold";
  out.budget = g.order() == 0 ? 0 : g.max_degree() + 2;

  TotalColoring c;
  for (int k = 0; k < static_cast<int>(script.size()); ++k) {
    // Step k adds vertex k to the prefix on vertices 0..k-1.
    const MockStep& step = script[k];
    const Graph h = prefix_graph(g, k + 1);
    switch (step.kind) {
      case MockStep::Kind::Isolated:
        c.vertex_colors.push_back(1);
        break;

      case MockStep::Kind::Pendant: {
        const int j = step.ref;
        std::vector<int> at_j{c.vertex_colors[j]};
        for (const auto& [e, color] : c.edge_colors)
          if (e.u == j || e.v == j) at_j.push_back(color);
        const int edge_color = smallest_absent(at_j);
        c.edge_colors.emplace(make_edge(j, k), edge_color);
        c.vertex_colors.push_back(smallest_absent({edge_color, c.vertex_colors[j]}));
        break;
      }

      case MockStep::Kind::Dominant: {
        std::vector<int> label(k + 1);
        std::iota(label.begin(), label.end(), 0);
        c = restrict_complete(h, complete_total(k + 1), label);
        break;
      }

      case MockStep::Kind::CoDominant: {
        const int j = step.ref;
        if (k % 2 == 0) {
          // K_{k+1} (odd order) with the non-neighbor j as the vertex added last,
          // so the edge colors at j are the colors still missing on each line.
          std::vector<int> label(k + 1);
          int next = 0;
          for (int v = 0; v <= k; ++v) label[v] = v == j ? k : next++;
          TotalColoring candidate = restrict_complete(h, complete_total(k + 1), label);
          if (verify(h, candidate).is_valid()) {
            c = std::move(candidate);
            break;
          }
          TotalColoring partial = candidate;
          partial.vertex_colors[j] = 0;
          for (auto& [e, color] : partial.edge_colors)
            if (e.u == j || e.v == j) color = 0;
          SearchLimits limits;
          limits.node_budget = search_budget;
          CompletionResult res = complete_coloring(h, partial, out.budget, limits);
          if (res.status != SearchStatus::Found)
            throw budget_exhausted("star recoloring at step " + std::to_string(k) + " failed");
          c = res.coloring;
          out.notes.push_back("step " + std::to_string(k) + ": recolored the star of the non-neighbor exactly");
        } else {
          // Even order with a co-dominant vertex: extend the current coloring when
          // possible, otherwise search the whole prefix within Delta + 2.
          TotalColoring partial = c;
          partial.vertex_colors.push_back(0);
          SearchLimits limits;
          limits.node_budget = search_budget;
          CompletionResult res = complete_coloring(h, partial, out.budget, limits);
          if (res.status != SearchStatus::Found) {
            res = complete_coloring(h, TotalColoring{}, h.max_degree() + 2, limits);
            if (res.status != SearchStatus::Found)
              throw budget_exhausted("exact search at step " + std::to_string(k) + " exceeded " +
                                     std::to_string(search_budget) + " nodes");
            out.notes.push_back("step " + std::to_string(k) + ": extension failed, prefix recolored by exact search");
          }
          c = res.coloring;
        }
        break;
      }
    }
  }
  out.coloring = std::move(c);
  out.colors_used = out.coloring.colors_used();
  return out;
}

}  // namespace totcol
