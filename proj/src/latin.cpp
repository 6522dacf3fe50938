#include "totcol/latin.hpp"

#include "totcol/error.hpp"

namespace totcol {

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != rows_.size()) throw precondition_error("latin square rows must form a square");
}

LatinSquare anti_circulant_square(int q) {
  if (q < 1 || q % 2 == 0) throw precondition_error("anti-circulant square needs a positive odd order");
  const int half = (q + 1) / 2;
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) rows[i - 1][j - 1] = ((i + j) * half - 1) % q + 1;
  return LatinSquare(std::move(rows));
}

bool is_latin(const LatinSquare& sq) {
  const int q = sq.order();
  for (int i = 0; i < q; ++i) {
    std::vector<bool> in_row(q + 1, false);
    std::vector<bool> in_col(q + 1, false);
    for (int j = 0; j < q; ++j) {
      const int r = sq.at(i, j);
      const int c = sq.at(j, i);
      if (r < 1 || r > q || in_row[r]) return false;
      if (c < 1 || c > q || in_col[c]) return false;
      in_row[r] = in_col[c] = true;
    }
  }
  return true;
}

bool is_commutative(const LatinSquare& sq) {
  for (int i = 0; i < sq.order(); ++i)
    for (int j = 0; j < i; ++j)
      if (sq.at(i, j) != sq.at(j, i)) return false;
  return true;
}

bool is_idempotent(const LatinSquare& sq) {
  for (int i = 0; i < sq.order(); ++i)
    if (sq.at(i, i) != i + 1) return false;
  return true;
}

bool is_anti_circulant(const LatinSquare& sq) {
  const int q = sq.order();
  for (int i = 1; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (sq.at(i, j) != sq.at(i - 1, (j + 1) % q)) return false;
  return true;
}

}  // namespace totcol
