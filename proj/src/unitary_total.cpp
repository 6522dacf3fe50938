#include <string>

#include "totcol/complete_total.hpp"
#include "totcol/constructions.hpp"
#include "totcol/edge_coloring.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/number_theory.hpp"

namespace totcol {

ConstructionResult unitary_total(int n) {
  if (n < 2) throw precondition_error("unitary_total requires n >= 2");
  ConstructionResult out;
  out.graph = build_unitary_cayley(n);
  const Graph& g = out.graph;
  const int phi = euler_phi(n);
  out.budget = phi + 2;

  if (is_prime(n)) {
    out.method = "unitary-prime";
    out.coloring = complete_total(n);
  } else if (n % 2 == 0) {
    out.method = "unitary-bipartite";
    const EdgeColoring edges = bipartite_edge_color(g);
    std::vector<int> vertices(n);
    for (int v = 0; v < n; ++v) vertices[v] = phi + 1 + v % 2;
    out.coloring = make_coloring(g, vertices, edges);
  } else {
    out.method = "unitary-cliques";
    const int p = smallest_prime_factor(n);
    const TotalColoring clique = complete_total(p);
    std::vector<int> vertices(n);
    std::vector<int> edges(g.size(), 0);
    std::vector<int> rest;
    for (int id = 0; id < g.size(); ++id) {
      const Edge& e = g.edge(id);
      if (e.u / p == e.v / p) {
        edges[id] = clique.edge_colors.at(Edge{e.u % p, e.v % p});
      } else {
        rest.push_back(id);
      }
    }
    for (int v = 0; v < n; ++v) vertices[v] = clique.vertex_colors[v % p];
    const Graph remainder = edge_subgraph(g, rest);
    const EdgeColoring extra = edge_color_plus_one(remainder);
    for (int rid = 0; rid < remainder.size(); ++rid) edges[*g.edge_id(remainder.edge(rid).u, remainder.edge(rid).v)] = p + extra[rid];
    out.coloring = make_coloring(g, vertices, edges);
  }
  out.colors_used = out.coloring.colors_used();
  return out;
}

}  // namespace totcol
