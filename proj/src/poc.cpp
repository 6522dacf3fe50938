#include "totcol/poc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "totcol/edge_coloring.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/latin.hpp"
#include "totcol/oracle.hpp"
#include "totcol/verify.hpp"

namespace totcol {

namespace {

bool cycle_adjacent(int n, int k, int u, int v) {
  int d = std::abs(u - v);
  d = std::min(d, n - d);
  return d >= 1 && d <= k;
}

// Colors 1..palette only, diagonal filled, support of C_n^k, and verify-clean.
void require_valid_matrix(const ColorMatrix& m, int k, int palette, const char* what) {
  const int n = m.size();
  if (k < 1 || 2 * k >= n) throw precondition_error(std::string(what) + ": k out of range for a " +
                                                    std::to_string(n) + "-vertex matrix");
  const Graph g = build_power_of_cycle(n, k);
  const TotalColoring c = matrix_to_coloring(g, m);
  if (!verify(g, c).is_valid()) throw precondition_error(std::string(what) + ": input matrix is not a total coloring");
  if (c.palette() > palette)
    throw precondition_error(std::string(what) + ": input matrix uses colors above " + std::to_string(palette));
}

// Vertex and edge colors read straight off the matrix (0 stays uncolored).
TotalColoring read_partial(const Graph& g, const ColorMatrix& m) {
  TotalColoring c;
  c.vertex_colors.resize(g.order());
  for (int v = 0; v < g.order(); ++v) c.vertex_colors[v] = m.at(v, v);
  for (const Edge& e : g.edges()) c.edge_colors.emplace(e, m.at(e.u, e.v));
  return c;
}

constexpr std::uint64_t kWindowBudget = 20'000;
constexpr std::uint64_t kTabuIterations = 2'000'000;

// Literal result if it verifies; otherwise exact completion of the conflicting
// elements alone, then tabu search over the whole total graph started from the
// literal colors.
ColorMatrix repair(const Graph& g, const ColorMatrix& literal, int palette, std::vector<std::string>& notes) {
  const TotalColoring start = read_partial(g, literal);
  const VerificationReport report = verify(g, start);
  if (report.is_valid()) return literal;

  std::set<Vertex> bad;
  for (const Violation& v : report.violations)
    for (const Element& el : v.witnesses) {
      bad.insert(el.u);
      if (!el.is_vertex()) bad.insert(el.v);
    }
  notes.push_back("literal rule left " + std::to_string(report.violations.size()) + " conflicts at " +
                  std::to_string(bad.size()) + " vertices");

  TotalColoring partial = start;
  for (const Violation& v : report.violations)
    for (const Element& el : v.witnesses) {
      if (el.is_vertex())
        partial.vertex_colors[el.u] = 0;
      else
        partial.edge_colors[make_edge(el.u, el.v)] = 0;
    }
  SearchLimits limits;
  limits.node_budget = kWindowBudget;
  CompletionResult exact = complete_coloring(g, partial, palette, limits);
  if (exact.status == SearchStatus::Found) {
    notes.push_back("recolored the conflicting elements by exact completion");
    return coloring_to_matrix(g, exact.coloring);
  }

  const int n = g.order();
  std::vector<int> initial(n + g.size());
  std::copy(start.vertex_colors.begin(), start.vertex_colors.end(), initial.begin());
  const std::vector<int> edges = edge_color_array(g, start);
  std::copy(edges.begin(), edges.end(), initial.begin() + n);
  LocalSearchOptions options;
  options.max_iterations = kTabuIterations;
  SearchOutcome tabu = local_search_coloring(total_model(g), palette, initial, {}, options);
  if (tabu.status == SearchStatus::Found) {
    notes.push_back("recolored by tabu search from the literal matrix (" + std::to_string(tabu.nodes) + " moves)");
    std::vector<int> vertex_part(tabu.colors.begin(), tabu.colors.begin() + n);
    std::vector<int> edge_part(tabu.colors.begin() + n, tabu.colors.end());
    return coloring_to_matrix(g, make_coloring(g, vertex_part, edge_part));
  }
  throw construction_error("could not repair the modified matrix within " + std::to_string(palette) + " colors");
}

}  // namespace

ColorMatrix poc_base(int n) {
  if (n < 6 || n % 4 != 2) throw precondition_error("poc_base requires n = 2 mod 4 and n >= 6");
  const int k = (n - 2) / 4;
  const int q = 2 * k + 1;
  const LatinSquare sq = anti_circulant_square(q);
  ColorMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (i == j || cycle_adjacent(n, k, i, j)) m.set(i, j, sq.at(i % q, j % q));
  return m;
}

TotalColoring poc_augment(int n, int k) {
  if (n < 6 || n % 4 != 2) throw precondition_error("poc_augment requires n = 2 mod 4 and n >= 6");
  const int k0 = (n - 2) / 4;
  if (k < k0 || 2 * k >= n) throw precondition_error("poc_augment requires (n - 2)/4 <= k < n/2");
  for (int x = k0 + 1; x <= k; ++x)
    if (std::gcd(n, x) != 1)
      throw precondition_error("added distance " + std::to_string(x) + " shares a factor with " + std::to_string(n));

  const Graph base_graph = build_power_of_cycle(n, k0);
  TotalColoring c = matrix_to_coloring(base_graph, poc_base(n));
  int fresh = 2 * k0 + 2;
  for (int x = k0 + 1; x <= k; ++x, fresh += 2) {
    const MatchingPair split = hamiltonian_split(n, x);
    for (const Edge& e : split.first) c.edge_colors.emplace(e, fresh);
    for (const Edge& e : split.second) c.edge_colors.emplace(e, fresh + 1);
  }
  return c;
}

void validate_block_params(const BlockParams& p) {
  if (p.s < 2 || p.s % 2 != 0) throw precondition_error("block layout needs an even number of blocks s");
  if (p.m < 1) throw precondition_error("block layout needs m >= 1");
  if (p.i < 1 || p.i > p.m + 1) throw precondition_error("block layout needs 1 <= i <= m + 1");
  if (2 * p.k() >= p.n()) throw precondition_error("block layout needs k < n/2");
}

std::optional<BlockParams> find_block_params(int n, int k) {
  if (k < 1) return std::nullopt;
  for (int q = k + 1; q <= 2 * k + 1; ++q) {
    if (q % 2 == 0 || n % q != 0 || (n / q) % 2 != 0) continue;
    BlockParams p{n / q, (q - 1) / 2, q - k};
    if (p.m >= 1 && 2 * k < n) return p;
  }
  return std::nullopt;
}

ColorMatrix poc_block(const BlockParams& p) {
  validate_block_params(p);
  const int q = p.q();
  const int n = p.n();
  const int k = p.k();
  const int s = p.s;
  const LatinSquare sq = anti_circulant_square(q);

  // Cell of the tableau block (r, r+1) at offset d = a - b >= i.
  auto tableau = [&](int r, int a, int b) {
    const int d = a - b;
    if (d > k) return sq.at(a, b);
    return r % 2 == 0 ? 2 * p.m + 2 + (d - p.i) : 2 * k + 1 - (d - p.i);
  };

  ColorMatrix m(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int ru = u / q, rv = v / q;
      const int a = u % q, b = v % q;
      int color = 0;
      if (ru == rv) {
        if (std::abs(a - b) <= k) color = sq.at(a, b);
      } else if (rv == (ru + 1) % s && a - b >= p.i) {
        color = tableau(ru, a, b);
      } else if (ru == (rv + 1) % s && b - a >= p.i) {
        color = tableau(rv, b, a);
      }
      if (color != 0) m.set(u, v, color);
    }
  }
  return m;
}

ColorMatrix poc_block(int n, int k) {
  const auto p = find_block_params(n, k);
  if (!p)
    throw precondition_error("C_" + std::to_string(n) + "^" + std::to_string(k) +
                             " has no block layout n = s(2m+1), k = 2m+1-i");
  return poc_block(*p);
}

ModifiedMatrix poc_shrink(const ColorMatrix& m, int k) {
  const int big = m.size();
  require_valid_matrix(m, k, 2 * k + 1, "poc_shrink");
  const int n = big - 1;
  if (2 * k >= n) throw precondition_error("poc_shrink: k must stay below half the new order");

  ColorMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, m.at(i, j));
  for (int t = 0; t < k; ++t) out.set(t, t + n - k, 2 * k + 2);

  ModifiedMatrix result{out, {}};
  result.matrix = repair(build_power_of_cycle(n, k), out, 2 * k + 2, result.notes);
  return result;
}

ModifiedMatrix poc_grow(const ColorMatrix& m, int k) {
  const int big = m.size();
  require_valid_matrix(m, k, 2 * k + 1, "poc_grow");
  const int n = big + 1;
  const int last = big;

  ColorMatrix out(n);
  for (int i = 0; i < big; ++i)
    for (int j = i; j < big; ++j) out.set(i, j, m.at(i, j));
  for (int t = 0; t < k; ++t) {
    out.set(t, last, out.at(t, t + k));
    out.set(t, t + k, 2 * k + 2);
    out.set(last - k + t, last, out.at(last - k + t, t));
    out.set(last - k + t, t, 0);
  }
  out.set(last, last, 2 * k + 2);

  ModifiedMatrix result{out, {}};
  result.matrix = repair(build_power_of_cycle(n, k), out, 2 * k + 2, result.notes);
  return result;
}

std::optional<BaseInstance> poc_base_instance(int n, int k) {
  if (k < 1 || 2 * k >= n) return std::nullopt;
  if (n % 4 == 2 && n >= 6 && k == (n - 2) / 4) return BaseInstance{poc_base(n), "base"};
  if (auto p = find_block_params(n, k)) return BaseInstance{poc_block(*p), "block"};
  if (n % 4 == 2 && n >= 6 && k > (n - 2) / 4) {
    bool coprime = true;
    for (int x = (n - 2) / 4 + 1; x <= k; ++x) coprime = coprime && std::gcd(n, x) == 1;
    if (coprime) return BaseInstance{coloring_to_matrix(build_power_of_cycle(n, k), poc_augment(n, k)), "augment"};
  }
  return std::nullopt;
}

ConstructionResult poc_any_odd(int n, int k) {
  if (n % 2 == 0) throw precondition_error("poc_any_odd requires odd n");
  if (k < 1 || 2 * k >= n) throw precondition_error("poc_any_odd requires 1 <= k < n/2");

  ConstructionResult out;
  out.graph = build_power_of_cycle(n, k);
  auto finish = [&](const ModifiedMatrix& mod, std::string method) {
    out.coloring = matrix_to_coloring(out.graph, mod.matrix);
    out.colors_used = out.coloring.colors_used();
    out.method = std::move(method);
    out.notes.insert(out.notes.end(), mod.notes.begin(), mod.notes.end());
    return out;
  };

  if (auto base = poc_base_instance(n + 1, k)) {
    out.budget = 2 * k + 2;
    return finish(poc_shrink(base->matrix, k), "shrink(" + base->method + ")");
  }
  if (auto base = poc_base_instance(n - 1, k)) {
    out.budget = 2 * k + 2;
    return finish(poc_grow(base->matrix, k), "grow(" + base->method + ")");
  }

  out.budget = 2 * k + 3;
  out.notes.push_back("neither C_" + std::to_string(n - 1) + "^" + std::to_string(k) + " nor C_" +
                      std::to_string(n + 1) + "^" + std::to_string(k) +
                      " has a base construction; used exact search");
  SearchLimits limits;
  limits.node_budget = 10'000'000;
  CompletionResult res = complete_coloring(out.graph, TotalColoring{}, out.budget, limits);
  if (res.status != SearchStatus::Found)
    throw construction_error("no base instance for C_" + std::to_string(n) + "^" + std::to_string(k) +
                             " and exact search for " + std::to_string(out.budget) + " colors failed");
  out.coloring = res.coloring;
  out.colors_used = out.coloring.colors_used();
  out.method = "exact";
  return out;
}

}  // namespace totcol
