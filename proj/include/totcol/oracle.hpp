#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "totcol/coloring.hpp"
#include "totcol/graph.hpp"
#include "totcol/search.hpp"

namespace totcol {

/// Result of an exact search. When the budget runs out, [lower, upper] brackets the true value.
struct OracleOutcome {
  int lower = 0;
  int upper = 0;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool cancelled = false;
  /// Coloring achieving `upper`: a total coloring, or (chromatic index) edge colors only.
  TotalColoring witness;

  bool exact() const { return !budget_hit && !cancelled && lower == upper; }
  int value() const { return upper; }
};

/// Total chromatic number chi''(G): colorability of the total graph tested for
/// palettes Delta+1, Delta+2, ... until one succeeds.
OracleOutcome total_chromatic_exact(const Graph& g, const SearchLimits& limits = {});

/// Chromatic index chi'(G) via the line graph, starting from Delta.
OracleOutcome chromatic_index_exact(const Graph& g, const SearchLimits& limits = {});

struct CompletionResult {
  SearchStatus status = SearchStatus::Infeasible;
  TotalColoring coloring;
  std::uint64_t nodes = 0;
};

/// Extends `partial` (uncolored elements absent or 0) to a total coloring of g
/// using colors 1..palette without changing any already-colored element.
CompletionResult complete_coloring(const Graph& g, const TotalColoring& partial, int palette,
                                   const SearchLimits& limits = {});

}  // namespace totcol
