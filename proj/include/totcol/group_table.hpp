#pragma once

#include <optional>
#include <span>
#include <vector>

#include "totcol/graph.hpp"

namespace totcol {

/// Finite group given by its multiplication table over elements 0..order-1.
///
/// The constructor checks closure, associativity, identity and inverses, so a
/// GroupTable value is always a group.
class GroupTable {
 public:
  static constexpr int kDefaultMaxOrder = 64;

  explicit GroupTable(std::vector<std::vector<int>> table, int max_order = kDefaultMaxOrder);

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& rows() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Cay(group, S): a ~ b iff a * b^-1 is in S. S must be inverse-closed and omit the identity.
Graph build_cayley_from_table(const GroupTable& group, std::span<const int> connection_set);

/// Some s != 1 with s*s = 1 (the smallest such element), or nullopt for odd-order groups.
std::optional<int> order_two_element(const GroupTable& group);

}  // namespace totcol
