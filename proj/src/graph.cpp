#include "totcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "totcol/error.hpp"

namespace totcol {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw precondition_error("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw precondition_error("negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw precondition_error("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "}");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw precondition_error("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

  adj_.assign(n, {});
  for (int id = 0; id < size(); ++id) {
    const Edge& e = edges_[id];
    adj_[e.u].push_back({e.v, id});
    adj_[e.v].push_back({e.u, id});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto& list = adj_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw precondition_error("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges())
    edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), std::move(edges));
}

Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int id : edge_ids) edges.push_back(g.edge(id));
  return Graph(g.order(), std::move(edges));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(u)) {
        auto& sv = side[inc.neighbor];
        if (sv == -1) {
          sv = 1 - side[u];
          queue.push_back(inc.neighbor);
        } else if (sv == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace totcol
