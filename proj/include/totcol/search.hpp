#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stop_token>
#include <vector>

#include "totcol/graph.hpp"

namespace totcol {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchLimits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::stop_token stop;
  /// Called roughly every million nodes with the running node count.
  std::function<void(std::uint64_t)> progress;
};

enum class SearchStatus { Found, Infeasible, BudgetExhausted, Cancelled };

/// Elements to color, their pairwise conflicts, and the graph vertices each
/// element occupies (one for a vertex element, two for an edge element).
/// Two elements of the same color never share an occupied vertex.
struct ConflictModel {
  int vertex_count = 0;
  std::vector<std::vector<int>> conflicts;
  std::vector<std::array<int, 2>> occupies;

  int size() const { return static_cast<int>(conflicts.size()); }
  bool is_vertex_element(int e) const { return occupies[e][1] < 0; }
};

/// Total graph of g: elements 0..n-1 are vertices, n + id is edge `id`.
ConflictModel total_model(const Graph& g);

/// Line graph of g: element `id` is edge `id`.
ConflictModel line_model(const Graph& g);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<int> colors;  ///< 1-based colors per element when Found
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for a proper coloring with colors 1..palette.
///
/// Elements with fixed[e] > 0 keep that color. Branching follows DSATUR
/// (most saturated element, ties by degree then index); among colors no
/// element uses yet only the smallest is tried.
SearchOutcome color_with_palette(const ConflictModel& model, int palette, std::span<const int> fixed,
                                 const SearchLimits& limits);

struct LocalSearchOptions {
  std::uint64_t max_iterations = 2'000'000;
  std::uint64_t seed = 0;
};

/// Tabu search (TabuCol) for a proper coloring with colors 1..palette,
/// starting from `initial` (entries outside 1..palette are replaced first).
/// Elements with frozen[e] set never change. Incomplete: BudgetExhausted
/// means no coloring was found, not that none exists.
SearchOutcome local_search_coloring(const ConflictModel& model, int palette, std::span<const int> initial,
                                    std::span<const char> frozen, const LocalSearchOptions& options);

/// Single DSATUR pass without backtracking; always succeeds.
std::vector<int> greedy_dsatur(const ConflictModel& model);

}  // namespace totcol
