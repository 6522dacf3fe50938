#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace totcol {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Normalizes {a, b} so that u < v. Throws precondition_error on a == b.
Edge make_edge(Vertex a, Vertex b);

struct Incidence {
  Vertex neighbor;
  int edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically and identified by their index in
/// that order, so edge ids are stable for equal graphs.
class Graph {
 public:
  Graph() = default;

  /// Throws precondition_error on self-loops, duplicate edges or endpoints >= n.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  /// Incidences of v sorted by neighbor.
  std::span<const Incidence> incident(Vertex v) const { return adj_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;
  bool is_regular() const { return n_ == 0 || max_degree() == min_degree(); }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<int> edge_id(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

Graph complete_graph(int n);

/// Graph with vertex v of `g` renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Graph on the same vertex set containing only the listed edge ids of `g`.
Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids);

/// Two-colouring of the vertices (0/1 per vertex), or nullopt when `g` has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace totcol
