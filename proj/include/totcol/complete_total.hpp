#pragma once

#include "totcol/coloring.hpp"

namespace totcol {

/// Hinz-Parisse total coloring of K_n (n >= 1) on vertices 0..n-1.
///
/// Even n: edge {i, j} gets c(i, j) = (tau_i(j) + tau_j(i) + 2) mod (n + 1),
/// where tau_k swaps k and n - 1, and vertex i gets i (all shifted to 1-based).
/// Odd n: the K_{n-1} coloring plus a last vertex whose edges take the color
/// still missing at each line. Uses n + 1 colors for even n and n for odd n.
TotalColoring complete_total(int n);

}  // namespace totcol
