#pragma once

#include <string>
#include <vector>

#include "totcol/coloring.hpp"
#include "totcol/graph.hpp"

namespace totcol {

/// A vertex (v == -1) or an edge {u, v}.
struct Element {
  int u = 0;
  int v = -1;

  static Element vertex(Vertex x) { return {x, -1}; }
  static Element edge(const Edge& e) { return {e.u, e.v}; }
  bool is_vertex() const { return v < 0; }
  bool operator==(const Element&) const = default;
};

enum class ViolationKind { VertexVertex, EdgeEdge, VertexEdge, Missing, Spurious };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Element> witnesses;
};

struct VerificationReport {
  std::vector<Violation> violations;
  int colors_used = 0;

  bool is_valid() const { return violations.empty(); }
  int count(ViolationKind kind) const;
};

/// Checks conditions (a)-(c) of a total coloring plus domain coverage.
/// Every conflicting pair is reported once.
VerificationReport verify(const Graph& g, const TotalColoring& c);

/// Colors of 1..palette absent from the element itself and from every element
/// adjacent or incident to it (uncolored elements contribute nothing).
std::vector<int> missing_colors(const Graph& g, const TotalColoring& c, Element element, int palette);

}  // namespace totcol
