#include "totcol/group_table.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "totcol/error.hpp"

namespace totcol {

GroupTable::GroupTable(std::vector<std::vector<int>> table, int max_order) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw precondition_error("group table is empty");
  if (n > max_order)
    throw precondition_error("group order " + std::to_string(n) + " exceeds limit " + std::to_string(max_order));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw precondition_error("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw precondition_error("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw precondition_error("group table is not associative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw precondition_error("group table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw precondition_error("element " + std::to_string(a) + " has no inverse");
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw precondition_error("cyclic group requires n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(t), std::max(n, kDefaultMaxOrder));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  // (x, y) is encoded as x * nb + y.
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) t[p][q] = a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb);
  return GroupTable(std::move(t), std::max(n, kDefaultMaxOrder));
}

Graph build_cayley_from_table(const GroupTable& group, std::span<const int> connection_set) {
  const int n = group.order();
  std::set<int> s;
  for (int x : connection_set) {
    if (x < 0 || x >= n) throw precondition_error("connection set element out of range");
    if (x == group.identity()) throw precondition_error("connection set contains the identity");
    s.insert(x);
  }
  for (int x : s)
    if (!s.contains(group.inverse(x)))
      throw precondition_error("connection set is not closed under inverses (missing inverse of " +
                               std::to_string(x) + ")");
  std::set<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && s.contains(group.mul(a, group.inverse(b)))) edges.insert(make_edge(a, b));
  return Graph(n, {edges.begin(), edges.end()});
}

std::optional<int> order_two_element(const GroupTable& group) {
  for (int s = 0; s < group.order(); ++s)
    if (s != group.identity() && group.mul(s, s) == group.identity()) return s;
  return std::nullopt;
}

}  // namespace totcol
