#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "totcol/construction.hpp"
#include "totcol/group_table.hpp"
#include "totcol/mock_threshold.hpp"
#include "totcol/search.hpp"

namespace totcol {

/// Extends a total coloring `c` of G = Cay(group, S) to G' = Cay(group, S u S_extra):
/// the edges of G' - G are 1-factorized and each factor gets a fresh color, so
/// the palette grows by |S_extra| = Delta' - Delta.
///
/// `s` is the order-two element whose cosets {g, gs} are independent in G'
/// (found with order_two_element when omitted). When an old vertex color
/// clashes across a new edge, the vertices alone are recolored by exact
/// completion inside the same palette, and a note records it.
///
/// Throws precondition_error for odd order, S_extra not inverse-closed, meeting
/// S, containing an order-two element or not generating the group, or c not
/// valid on G; construction_error if the 1-factorization fails.
ConstructionResult cayley_extend(const Graph& g, const TotalColoring& c, const GroupTable& group,
                                 std::span<const int> connection_set, std::span<const int> extra,
                                 std::optional<int> s = std::nullopt,
                                 std::uint64_t factor_budget = 1'000'000);

/// Total coloring of the unitary Cayley graph X_n (n >= 2) within phi(n) + 2 colors.
/// Prime n: complete_total. Even n: Konig edge coloring plus one color per side.
/// Odd composite n: the blocks {kp, .., kp + p - 1} (p the smallest prime
/// factor) are p-cliques colored by complete_total(p); the rest of the edges
/// take fresh colors from edge_color_plus_one.
ConstructionResult unitary_total(int n);

inline constexpr std::uint64_t kMockSearchBudget = 10'000'000;

/// Inductive total coloring of a mock threshold graph within Delta + 2 colors,
/// one case per step kind. `g` must equal build_mock_threshold(script).
/// Throws budget_exhausted if the exact search for a co-dominant step on an
/// odd prefix runs out of nodes.
ConstructionResult mock_threshold_total(const Graph& g, const MockThresholdScript& script,
                                        std::uint64_t search_budget = kMockSearchBudget);

/// Total coloring of the odd graph O_m (m >= 2) within m + 2 colors. I is the
/// set of vertices containing the largest ground element; the rest induce a
/// perfect matching.
ConstructionResult odd_graph_total(int m);

}  // namespace totcol
