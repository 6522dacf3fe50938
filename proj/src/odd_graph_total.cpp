#include <algorithm>

#include "totcol/constructions.hpp"
#include "totcol/edge_coloring.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"

namespace totcol {

ConstructionResult odd_graph_total(int m) {
  if (m < 2) throw precondition_error("odd_graph_total requires m >= 2");
  const LabeledGraph odd = build_odd_graph(m);
  const Graph& g = odd.graph;
  const int n = g.order();
  const int x = 2 * m - 2;

  auto contains = [&](Vertex v, int element) {
    const auto& s = odd.labels[v];
    return std::find(s.begin(), s.end(), element) != s.end();
  };
  std::vector<bool> in_i(n);
  for (Vertex v = 0; v < n; ++v) in_i[v] = contains(v, x);

  std::vector<int> cross, matching;
  for (int id = 0; id < g.size(); ++id) (in_i[g.edge(id).u] || in_i[g.edge(id).v] ? cross : matching).push_back(id);

  const Graph bipartite = edge_subgraph(g, cross);
  const EdgeColoring cross_colors = bipartite_edge_color(bipartite);
  std::vector<int> edges(g.size(), 0);
  for (int rid = 0; rid < bipartite.size(); ++rid)
    edges[*g.edge_id(bipartite.edge(rid).u, bipartite.edge(rid).v)] = cross_colors[rid];
  for (int id : matching) edges[id] = m + 1;

  std::vector<int> vertices(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (in_i[v]) vertices[v] = m + 1;
  for (int id : matching) {
    const Edge& e = g.edge(id);
    const Vertex top = contains(e.u, 0) ? e.u : e.v;
    const Vertex other = top == e.u ? e.v : e.u;
    vertices[top] = m + 2;
    std::vector<bool> used(m + 1, false);
    for (const auto& inc : g.incident(other))
      if (edges[inc.edge] <= m) used[edges[inc.edge]] = true;
    int missing = 1;
    while (missing <= m && used[missing]) ++missing;
    if (missing > m) throw construction_error("no bipartite color is missing at a matching vertex");
    vertices[other] = missing;
  }

  ConstructionResult out;
  out.graph = g;
  out.coloring = make_coloring(g, vertices, edges);
  out.colors_used = out.coloring.colors_used();
  out.budget = m + 2;
  out.method = "odd-graph";
  return out;
}

}  // namespace totcol
