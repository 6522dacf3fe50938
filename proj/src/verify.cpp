#include "totcol/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "totcol/error.hpp"

namespace totcol {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VertexVertex: return "vertex-vertex";
    case ViolationKind::EdgeEdge: return "edge-edge";
    case ViolationKind::VertexEdge: return "vertex-edge";
    case ViolationKind::Missing: return "missing";
    case ViolationKind::Spurious: return "spurious";
  }
  return "unknown";
}

int VerificationReport::count(ViolationKind kind) const {
  return static_cast<int>(std::count_if(violations.begin(), violations.end(),
                                        [kind](const Violation& v) { return v.kind == kind; }));
}

VerificationReport verify(const Graph& g, const TotalColoring& c) {
  VerificationReport report;
  report.colors_used = c.colors_used();
  auto add = [&](ViolationKind kind, std::vector<Element> witnesses) {
    report.violations.push_back({kind, std::move(witnesses)});
  };

  const int n = g.order();
  std::vector<int> vcolor(n, 0);
  for (int v = 0; v < static_cast<int>(c.vertex_colors.size()); ++v) {
    if (v >= n) {
      add(ViolationKind::Spurious, {Element::vertex(v)});
      continue;
    }
    vcolor[v] = c.vertex_colors[v];
  }
  for (int v = 0; v < n; ++v)
    if (vcolor[v] <= 0) add(ViolationKind::Missing, {Element::vertex(v)});

  std::vector<int> ecolor(g.size(), 0);
  for (const auto& [e, color] : c.edge_colors) {
    auto id = g.edge_id(e.u, e.v);
    if (!id || e.u > e.v) {
      add(ViolationKind::Spurious, {Element{e.u, e.v}});
      continue;
    }
    ecolor[*id] = color;
  }
  for (int id = 0; id < g.size(); ++id)
    if (ecolor[id] <= 0) add(ViolationKind::Missing, {Element::edge(g.edge(id))});

  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (vcolor[e.u] > 0 && vcolor[e.u] == vcolor[e.v])
      add(ViolationKind::VertexVertex, {Element::vertex(e.u), Element::vertex(e.v)});
    if (ecolor[id] <= 0) continue;
    for (Vertex end : {e.u, e.v})
      if (vcolor[end] == ecolor[id]) add(ViolationKind::VertexEdge, {Element::vertex(end), Element::edge(e)});
  }

  for (Vertex v = 0; v < n; ++v) {
    std::map<int, std::vector<int>> by_color;
    for (const auto& inc : g.incident(v))
      if (ecolor[inc.edge] > 0) by_color[ecolor[inc.edge]].push_back(inc.edge);
    for (const auto& [color, ids] : by_color)
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
          add(ViolationKind::EdgeEdge, {Element::edge(g.edge(ids[a])), Element::edge(g.edge(ids[b]))});
  }
  return report;
}

std::vector<int> missing_colors(const Graph& g, const TotalColoring& c, Element element, int palette) {
  std::set<int> used;
  auto vertex_color = [&](Vertex v) {
    return v < static_cast<int>(c.vertex_colors.size()) ? c.vertex_colors[v] : 0;
  };
  auto edge_color = [&](Vertex a, Vertex b) {
    auto it = c.edge_colors.find(make_edge(a, b));
    return it == c.edge_colors.end() ? 0 : it->second;
  };
  auto add_star = [&](Vertex v, bool with_neighbors) {
    used.insert(vertex_color(v));
    for (const auto& inc : g.incident(v)) {
      used.insert(edge_color(v, inc.neighbor));
      if (with_neighbors) used.insert(vertex_color(inc.neighbor));
    }
  };

  if (element.is_vertex()) {
    if (element.u < 0 || element.u >= g.order()) throw precondition_error("vertex out of range");
    add_star(element.u, true);
  } else {
    if (!g.adjacent(element.u, element.v)) throw precondition_error("element is not an edge of the graph");
    add_star(element.u, false);
    add_star(element.v, false);
  }
  std::vector<int> out;
  for (int color = 1; color <= palette; ++color)
    if (!used.contains(color)) out.push_back(color);
  return out;
}

}  // namespace totcol
