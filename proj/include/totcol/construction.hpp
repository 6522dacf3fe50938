#pragma once

#include <string>
#include <vector>

#include "totcol/coloring.hpp"
#include "totcol/graph.hpp"

namespace totcol {

/// A construction's output. `budget` is the color bound the construction
/// promises; `notes` lists every fallback path that ran.
struct ConstructionResult {
  Graph graph;
  TotalColoring coloring;
  int colors_used = 0;
  int budget = 0;
  std::string method;
  std::vector<std::string> notes;
};

}  // namespace totcol
