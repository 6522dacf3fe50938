#include "totcol/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <utility>

#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/oracle.hpp"

namespace totcol {

int predicted_total_chromatic(int n, int k) {
  const int delta = 2 * k;
  return (n % 2 == 1 && 3 * (k + 1) > n) ? delta + 2 : delta + 1;
}

std::vector<SweepRow> conjecture_sweep(const SweepOptions& options) {
  if (options.n_max > 64) throw precondition_error("sweep n_max above 64 is not desk scale");
  std::vector<std::pair<int, int>> instances;
  for (int n = std::max(options.n_min, 5); n <= options.n_max; ++n)
    for (int k = 2; k < n / 2; ++k) instances.emplace_back(n, k);

  std::vector<SweepRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < instances.size(); idx = next++) {
      const auto [n, k] = instances[idx];
      SearchLimits limits;
      limits.node_budget = options.budget;
      const OracleOutcome res = total_chromatic_exact(build_power_of_cycle(n, k), limits);
      SweepRow& row = rows[idx];
      row.n = n;
      row.k = k;
      row.delta = 2 * k;
      row.lower = res.lower;
      row.upper = res.upper;
      row.predicted = predicted_total_chromatic(n, k);
      row.nodes = res.nodes;
      if (res.exact())
        row.agrees = res.upper == row.predicted;
      else if (row.predicted < res.lower || row.predicted > res.upper)
        row.agrees = false;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(options.jobs, 1); ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,k,delta,chi_total_lo,chi_total_hi,predicted,agrees,nodes\n";
  for (const SweepRow& r : rows)
    out << r.n << ',' << r.k << ',' << r.delta << ',' << r.lower << ',' << r.upper << ',' << r.predicted << ','
        << (r.agrees ? (*r.agrees ? "true" : "false") : "unknown") << ',' << r.nodes << '\n';
  return out.str();
}

}  // namespace totcol
