#include "totcol/edge_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "totcol/error.hpp"

namespace totcol {

namespace {

// at(v, c) is the id of the edge of color c at v, or -1.
class ColorTable {
 public:
  ColorTable(const Graph& g, int colors)
      : g_(g), colors_(colors), at_(static_cast<std::size_t>(g.order()) * (colors + 1), -1), color_(g.size(), 0) {}

  int& at(Vertex v, int c) { return at_[static_cast<std::size_t>(v) * (colors_ + 1) + c]; }
  bool is_free(Vertex v, int c) { return at(v, c) < 0; }
  int first_free(Vertex v) {
    for (int c = 1; c <= colors_; ++c)
      if (is_free(v, c)) return c;
    throw construction_error("no free color at vertex " + std::to_string(v));
  }
  int color(int edge) const { return color_[edge]; }

  void paint(int edge, int c) {
    const Edge& e = g_.edge(edge);
    color_[edge] = c;
    at(e.u, c) = edge;
    at(e.v, c) = edge;
  }
  void erase(int edge) {
    const Edge& e = g_.edge(edge);
    const int c = color_[edge];
    if (c == 0) return;
    at(e.u, c) = -1;
    at(e.v, c) = -1;
    color_[edge] = 0;
  }

  // Swaps colors a and b along the maximal a/b path leaving `start` through its a-edge.
  void flip_path(Vertex start, int a, int b) {
    std::vector<int> path;
    Vertex x = start;
    int current = a;
    while (at(x, current) >= 0) {
      const int edge = at(x, current);
      path.push_back(edge);
      const Edge& e = g_.edge(edge);
      x = e.u == x ? e.v : e.u;
      current = current == a ? b : a;
    }
    std::vector<int> old(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      old[i] = color_[path[i]];
      erase(path[i]);
    }
    for (std::size_t i = 0; i < path.size(); ++i) paint(path[i], old[i] == a ? b : a);
  }

  EdgeColoring result() const { return color_; }

 private:
  const Graph& g_;
  int colors_;
  std::vector<int> at_;
  std::vector<int> color_;
};

Vertex other_end(const Edge& e, Vertex x) { return e.u == x ? e.v : e.u; }

}  // namespace

EdgeColoring bipartite_edge_color(const Graph& g) {
  if (!bipartition(g)) throw precondition_error("graph is not bipartite");
  const int delta = g.max_degree();
  ColorTable table(g, delta);
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    const int a = table.first_free(e.u);
    const int b = table.first_free(e.v);
    if (table.is_free(e.v, a)) {
      table.paint(id, a);
    } else if (table.is_free(e.u, b)) {
      table.paint(id, b);
    } else {
      // The a/b path from v cannot end at u in a bipartite graph.
      table.flip_path(e.v, a, b);
      table.paint(id, a);
    }
  }
  return table.result();
}

EdgeColoring edge_color_plus_one(const Graph& g) {
  const int palette = g.max_degree() + 1;
  ColorTable table(g, palette);
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e0 = g.edge(id);
    const Vertex u = e0.u;

    // Maximal fan of u starting at v: each next edge's color is free at the previous fan vertex.
    std::vector<Vertex> fan{e0.v};
    std::vector<bool> in_fan(g.order(), false);
    in_fan[e0.v] = true;
    while (true) {
      const Vertex last = fan.back();
      Vertex next = -1;
      for (int c = 1; c <= palette && next < 0; ++c) {
        if (!table.is_free(last, c) || table.is_free(u, c)) continue;
        const Vertex w = other_end(g.edge(table.at(u, c)), u);
        if (!in_fan[w]) next = w;
      }
      if (next < 0) break;
      fan.push_back(next);
      in_fan[next] = true;
    }

    const int c = table.first_free(u);
    const int d = table.first_free(fan.back());
    if (c != d) table.flip_path(u, d, c);

    auto fan_edge = [&](std::size_t i) { return *g.edge_id(u, fan[i]); };
    std::size_t w = 0;
    for (;; ++w) {
      if (w == fan.size()) throw construction_error("fan rotation found no pivot");
      if (w > 0) {
        const int col = table.color(fan_edge(w));
        if (col == 0 || !table.is_free(fan[w - 1], col)) throw construction_error("fan broken after path flip");
      }
      if (table.is_free(fan[w], d)) break;
    }
    for (std::size_t i = 0; i < w; ++i) {
      const int next_color = table.color(fan_edge(i + 1));
      table.erase(fan_edge(i + 1));
      table.erase(fan_edge(i));
      table.paint(fan_edge(i), next_color);
    }
    table.erase(fan_edge(w));
    table.paint(fan_edge(w), d);
  }
  return table.result();
}

MatchingPair hamiltonian_split(int n, int d) {
  if (n < 2 || n % 2 != 0) throw precondition_error("hamiltonian_split requires an even n");
  if (d < 1 || d >= n || std::gcd(n, d) != 1)
    throw precondition_error("hamiltonian_split requires gcd(n, d) = 1");
  MatchingPair out;
  int x = 0;
  for (int step = 0; step < n; ++step) {
    const int y = (x + d) % n;
    (step % 2 == 0 ? out.first : out.second).push_back(make_edge(x, y));
    x = y;
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

namespace {

class Factorizer {
 public:
  Factorizer(const Graph& g, const SearchLimits& limits)
      : g_(g), limits_(limits), used_(g.size(), false), matched_(g.order(), false) {}

  FactorizationResult run() {
    FactorizationResult out;
    const int rounds = g_.max_degree();
    out.success = peel(rounds);
    out.budget_hit = budget_hit_;
    out.nodes = nodes_;
    if (out.success) out.factors = factors_;
    return out;
  }

 private:
  bool peel(int rounds) {
    if (rounds == 0) return true;
    current_.clear();
    return extend(rounds);
  }

  // Builds a perfect matching of the unused edges, smallest unmatched vertex first.
  bool extend(int rounds) {
    if (budget_hit_) return false;
    Vertex u = 0;
    while (u < g_.order() && matched_[u]) ++u;
    if (u == g_.order()) {
      std::vector<int> matching = current_;
      for (int e : matching) used_[e] = true;
      std::fill(matched_.begin(), matched_.end(), false);
      factors_.push_back(matching);
      if (peel(rounds - 1)) return true;
      factors_.pop_back();
      for (int e : matching) used_[e] = false;
      current_ = matching;
      for (int e : matching) matched_[g_.edge(e).u] = matched_[g_.edge(e).v] = true;
      return false;
    }
    for (const auto& inc : g_.incident(u)) {
      if (used_[inc.edge] || matched_[inc.neighbor]) continue;
      if (++nodes_ > limits_.node_budget || ((nodes_ & 0xFFF) == 0 && limits_.stop.stop_requested())) {
        budget_hit_ = true;
        return false;
      }
      matched_[u] = matched_[inc.neighbor] = true;
      current_.push_back(inc.edge);
      if (extend(rounds)) return true;
      current_.pop_back();
      matched_[u] = matched_[inc.neighbor] = false;
      if (budget_hit_) return false;
    }
    return false;
  }

  const Graph& g_;
  const SearchLimits& limits_;
  std::vector<bool> used_;
  std::vector<bool> matched_;
  std::vector<int> current_;
  std::vector<std::vector<int>> factors_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

FactorizationResult one_factorize(const Graph& g, const SearchLimits& limits) {
  if (g.order() % 2 != 0) throw precondition_error("one_factorize requires an even number of vertices");
  if (!g.is_regular()) throw precondition_error("one_factorize requires a regular graph");
  return Factorizer(g, limits).run();
}

}  // namespace totcol
