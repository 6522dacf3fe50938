#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "totcol/constructions.hpp"
#include "totcol/edge_coloring.hpp"
#include "totcol/error.hpp"
#include "totcol/oracle.hpp"
#include "totcol/verify.hpp"

namespace totcol {

namespace {

bool generates(const GroupTable& group, std::span<const int> gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<int> stack{group.identity()};
  seen[group.identity()] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int s : gens) {
      const int y = group.mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

ConstructionResult cayley_extend(const Graph& g, const TotalColoring& c, const GroupTable& group,
                                 std::span<const int> connection_set, std::span<const int> extra,
                                 std::optional<int> s, std::uint64_t factor_budget) {
  const int n = group.order();
  if (n % 2 != 0) throw precondition_error("cayley_extend requires a group of even order");
  if (!(build_cayley_from_table(group, connection_set) == g))
    throw precondition_error("graph is not Cay(group, S)");
  if (!verify(g, c).is_valid()) throw precondition_error("input coloring is not a total coloring of Cay(group, S)");

  const std::set<int> base(connection_set.begin(), connection_set.end());
  const std::set<int> added(extra.begin(), extra.end());
  for (int x : added) {
    if (x < 0 || x >= n) throw precondition_error("S_extra element " + std::to_string(x) + " is not in the group");
    if (base.contains(x)) throw precondition_error("S_extra meets S at " + std::to_string(x));
    if (group.mul(x, x) == group.identity())
      throw precondition_error("S_extra contains the order-two element " + std::to_string(x));
  }

  ConstructionResult out;
  out.method = "cayley-extend";
  if (added.empty()) {
    out.graph = g;
    out.coloring = c;
    out.colors_used = c.colors_used();
    out.budget = c.palette();
    return out;
  }
  // Inverse closure and the identity check happen in build_cayley_from_table.
  const Graph extra_graph = build_cayley_from_table(group, extra);
  if (!generates(group, extra)) throw precondition_error("S_extra does not generate the group");

  const int involution = s ? *s : order_two_element(group).value();
  if (involution < 0 || involution >= n || involution == group.identity() ||
      group.mul(involution, involution) != group.identity())
    throw precondition_error("s is not an element of order two");

  std::vector<int> all(base.begin(), base.end());
  all.insert(all.end(), added.begin(), added.end());
  if (std::find(all.begin(), all.end(), involution) != all.end())
    throw precondition_error("s lies in the connection set, so {g, gs} is not independent");
  out.graph = build_cayley_from_table(group, all);

  SearchLimits limits;
  limits.node_budget = factor_budget;
  const FactorizationResult factors = one_factorize(extra_graph, limits);
  if (!factors.success)
    throw construction_error(factors.budget_hit ? "1-factorization of G' - G ran out of budget"
                                                : "G' - G has no 1-factorization");

  const int palette = c.palette();
  out.budget = palette + static_cast<int>(added.size());
  TotalColoring extended = c;
  for (std::size_t f = 0; f < factors.factors.size(); ++f)
    for (int id : factors.factors[f]) extended.edge_colors.emplace(extra_graph.edge(id), palette + 1 + static_cast<int>(f));

  if (verify(out.graph, extended).count(ViolationKind::VertexVertex) > 0) {
    // Widening fallbacks, all inside the same palette: vertices alone, then
    // vertices plus the new edges, then everything.
    TotalColoring vertices_free = extended;
    std::fill(vertices_free.vertex_colors.begin(), vertices_free.vertex_colors.end(), 0);
    TotalColoring new_edges_free = vertices_free;
    for (const Edge& e : extra_graph.edges()) new_edges_free.edge_colors.erase(e);
    const std::pair<const TotalColoring*, const char*> attempts[] = {
        {&vertices_free, "vertices"},
        {&new_edges_free, "vertices and new edges"},
        {nullptr, "the whole graph"},
    };
    SearchLimits completion;
    completion.node_budget = factor_budget;
    bool done = false;
    for (const auto& [partial, what] : attempts) {
      CompletionResult res = complete_coloring(out.graph, partial ? *partial : TotalColoring{}, out.budget, completion);
      if (res.status == SearchStatus::Found) {
        extended = res.coloring;
        out.notes.push_back(std::string("vertex colors clashed across new edges; recolored ") + what +
                            " by exact completion");
        done = true;
        break;
      }
    }
    if (!done) throw construction_error("vertex colors clash on new edges and no recoloring fits the palette");
  }
  out.coloring = std::move(extended);
  out.colors_used = out.coloring.colors_used();
  return out;
}

}  // namespace totcol
