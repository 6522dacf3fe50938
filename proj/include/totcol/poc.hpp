#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totcol/coloring.hpp"
#include "totcol/construction.hpp"

namespace totcol {

/// Color matrix of C_n^k, k = (n - 2)/4, with 2k + 1 colors:
/// M[i][j] = L[i mod q][j mod q] on the diagonal and the adjacency support,
/// L the anti-circulant square of order q = 2k + 1. Requires n = 2 mod 4, n >= 6.
ColorMatrix poc_base(int n);

/// C_n^k with 2k + 1 colors for n = 2 mod 4 and (n - 2)/4 <= k < n/2: the base
/// coloring plus two fresh colors per extra distance x, whose 2-factor is a
/// Hamiltonian cycle split into two matchings. Every extra x needs gcd(n, x) = 1.
TotalColoring poc_augment(int n, int k);

/// Block layout parameters: n = s(2m + 1), k = 2m + 1 - i.
struct BlockParams {
  int s = 0;
  int m = 0;
  int i = 0;

  int q() const { return 2 * m + 1; }
  int n() const { return s * q(); }
  int k() const { return q() - i; }
};

/// Throws precondition_error unless s is even, m >= 1, 1 <= i <= m + 1 and k < n/2.
void validate_block_params(const BlockParams& p);

/// Smallest odd q = 2m + 1 in [k + 1, 2k + 1] with n = s q for even s, if any.
std::optional<BlockParams> find_block_params(int n, int k);

/// Color matrix of C_n^k with 2k + 1 colors assembled from q x q blocks.
/// Diagonal blocks carry the band |a - b| <= k of the anti-circulant square C
/// of order q. Block (r, r + 1 mod s) holds the cells with a - b >= i: the
/// corner a - b > k is grafted from C, the rest is a constant-diagonal tableau
/// of fresh colors, ascending from 2m + 2 for even r and descending from
/// 2k + 1 for odd r. Block (r + 1, r) is its transpose.
ColorMatrix poc_block(const BlockParams& p);
ColorMatrix poc_block(int n, int k);

/// A modified matrix plus a record of any repair that was needed.
struct ModifiedMatrix {
  ColorMatrix matrix;
  std::vector<std::string> notes;
};

/// C_{N-1}^k from a valid (2k + 1)-color matrix of C_N^k: drop the last row and
/// column, then give the k new wrap edges (t, t + n - k) the color 2k + 2. If the
/// result does not verify, the conflicting region is recolored by exact
/// completion within 2k + 2 colors and a note is added.
ModifiedMatrix poc_shrink(const ColorMatrix& m, int k);

/// C_{N+1}^k from a valid (2k + 1)-color matrix of C_N^k: the new vertex N gets
/// 2k + 2, the colors of (t, t + k) and (N - k + t, t) move to the edges of N,
/// (t, t + k) is recolored 2k + 2 and the old wrap edges disappear. Repaired as
/// in poc_shrink when the moved colors clash at N.
ModifiedMatrix poc_grow(const ColorMatrix& m, int k);

/// C_n^k for odd n via shrink from C_{n+1}^k or grow from C_{n-1}^k, whichever
/// neighbor has a (2k + 1)-color construction (budget 2k + 2). Without one, a
/// bounded exact search for 2k + 3 colors runs and is noted. Throws
/// construction_error when that search also fails.
ConstructionResult poc_any_odd(int n, int k);

/// A (2k + 1)-color matrix of C_n^k from poc_base, poc_block or poc_augment,
/// tried in that order, with the method name; nullopt if none applies.
struct BaseInstance {
  ColorMatrix matrix;
  std::string method;
};
std::optional<BaseInstance> poc_base_instance(int n, int k);

}  // namespace totcol
