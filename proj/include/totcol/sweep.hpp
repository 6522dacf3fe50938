#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totcol/search.hpp"

namespace totcol {

/// chi''(C_n^k) predicted as Delta + 2 when k > n/3 - 1 and n is odd, else Delta + 1.
int predicted_total_chromatic(int n, int k);

struct SweepRow {
  int n = 0;
  int k = 0;
  int delta = 0;
  int lower = 0;
  int upper = 0;
  int predicted = 0;
  /// Empty when the budget ran out before the prediction could be settled.
  std::optional<bool> agrees;
  std::uint64_t nodes = 0;
};

struct SweepOptions {
  int n_min = 5;
  int n_max = 13;
  std::uint64_t budget = kDefaultNodeBudget;
  int jobs = 1;
};

/// Oracle run over every C_n^k with 2 <= k < floor(n/2), n_min <= n <= n_max.
/// Instances are spread over `jobs` threads; rows come back sorted by (n, k).
std::vector<SweepRow> conjecture_sweep(const SweepOptions& options);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace totcol
