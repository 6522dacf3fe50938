#pragma once

#include <span>
#include <vector>

#include "totcol/graph.hpp"

namespace totcol {

/// Circulant graph C_n(S): u ~ v iff (u - v) mod n lies in S or -S.
/// Each distance must satisfy 1 <= d <= n/2.
Graph build_circulant(int n, std::span<const int> distances);

/// C_n^k = C_n(1..k). Requires 1 <= k < n/2.
Graph build_power_of_cycle(int n, int k);

/// Unitary Cayley graph X_n = Cay(Z_n, U_n). Requires n > 1.
Graph build_unitary_cayley(int n);

/// Graph whose vertex i corresponds to labels[i].
struct LabeledGraph {
  Graph graph;
  std::vector<std::vector<int>> labels;
};

/// Kneser graph K(n, k): k-subsets of {0..n-1} in lexicographic order, adjacent iff disjoint.
LabeledGraph build_kneser(int n, int k);

/// Odd graph O_m = K(2m-1, m-1). Requires m >= 2.
LabeledGraph build_odd_graph(int m);

}  // namespace totcol
