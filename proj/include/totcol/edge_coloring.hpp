#pragma once

#include <cstdint>
#include <vector>

#include "totcol/graph.hpp"
#include "totcol/search.hpp"

namespace totcol {

/// Edge colors indexed by edge id, 1-based.
using EdgeColoring = std::vector<int>;

/// Proper edge coloring with exactly Delta colors (Konig) via alternating-path
/// swaps. Throws precondition_error if g is not bipartite.
EdgeColoring bipartite_edge_color(const Graph& g);

/// Proper edge coloring with at most Delta + 1 colors (Misra-Gries fan rotation).
/// Deterministic: edges are processed in id order and ties go to the lowest color.
EdgeColoring edge_color_plus_one(const Graph& g);

/// The distance-d edges {i, i+d mod n} of an even n with gcd(n, d) = 1 form a
/// single Hamiltonian cycle; it is walked from 0 and split into alternate edges.
struct MatchingPair {
  std::vector<Edge> first;
  std::vector<Edge> second;
};
MatchingPair hamiltonian_split(int n, int d);

inline constexpr std::uint64_t kDefaultFactorBudget = 1'000'000;

struct FactorizationResult {
  bool success = false;
  bool budget_hit = false;
  std::uint64_t nodes = 0;
  /// Perfect matchings as edge-id lists (only on success).
  std::vector<std::vector<int>> factors;
};

/// Splits a regular graph of even order into Delta perfect matchings, peeling
/// the lexicographically smallest matching first and backtracking on dead ends.
/// `limits.node_budget` bounds the search (kDefaultFactorBudget is the usual choice).
FactorizationResult one_factorize(const Graph& g, const SearchLimits& limits);

}  // namespace totcol
