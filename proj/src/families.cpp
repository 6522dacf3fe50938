#include "totcol/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "totcol/error.hpp"

namespace totcol {

Graph build_circulant(int n, std::span<const int> distances) {
  if (n < 1) throw precondition_error("circulant requires n >= 1");
  std::set<Edge> edges;
  for (int d : distances) {
    if (d < 1 || d > n / 2)
      throw precondition_error("distance " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
    // For d == n/2 both directions land on the same pair, so the set dedupes it.
    for (int u = 0; u < n; ++u) edges.insert(make_edge(u, (u + d) % n));
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Graph build_power_of_cycle(int n, int k) {
  if (k < 1 || 2 * k >= n) throw precondition_error("power of cycle requires 1 <= k < n/2");
  std::vector<int> distances(static_cast<std::size_t>(k));
  std::iota(distances.begin(), distances.end(), 1);
  return build_circulant(n, distances);
}

Graph build_unitary_cayley(int n) {
  if (n <= 1) throw precondition_error("unitary Cayley graph requires n > 1");
  std::vector<int> units;
  for (int d = 1; d <= n / 2; ++d)
    if (std::gcd(d, n) == 1) units.push_back(d);
  return build_circulant(n, units);
}

LabeledGraph build_kneser(int n, int k) {
  if (k < 1 || k > n) throw precondition_error("Kneser graph requires 1 <= k <= n");
  if (n > 64) throw precondition_error("Kneser graph ground set limited to 64 elements");
  LabeledGraph out;
  std::vector<unsigned long long> masks;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    out.labels.push_back(subset);
    unsigned long long mask = 0;
    for (int x : subset) mask |= 1ULL << x;
    masks.push_back(mask);
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int j = pos + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  std::vector<Edge> edges;
  const int count = static_cast<int>(masks.size());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if ((masks[a] & masks[b]) == 0) edges.push_back({a, b});
  out.graph = Graph(count, std::move(edges));
  return out;
}

LabeledGraph build_odd_graph(int m) {
  if (m < 2) throw precondition_error("odd graph requires m >= 2");
  return build_kneser(2 * m - 1, m - 1);
}

}  // namespace totcol
