#pragma once

#include <vector>

namespace totcol {

/// q x q array of symbols 1..q (0-based row/column indices).
class LatinSquare {
 public:
  LatinSquare() = default;
  /// Rows must form a square; symbol ranges are not checked (see is_latin).
  explicit LatinSquare(std::vector<std::vector<int>> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Commutative, idempotent, anti-circulant square of odd order q:
/// cell (i, j) (1-based) holds ((i + j)(q + 1)/2 - 1 mod q) + 1.
LatinSquare anti_circulant_square(int q);

bool is_latin(const LatinSquare& sq);
bool is_commutative(const LatinSquare& sq);
/// Diagonal cell i (1-based) holds i.
bool is_idempotent(const LatinSquare& sq);
/// Each row is the previous row shifted cyclically one place to the left.
bool is_anti_circulant(const LatinSquare& sq);

}  // namespace totcol
