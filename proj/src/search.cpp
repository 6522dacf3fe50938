#include "totcol/search.hpp"

#include <algorithm>
#include <random>

#include "totcol/error.hpp"

namespace totcol {

ConflictModel total_model(const Graph& g) {
  const int n = g.order();
  ConflictModel model;
  model.vertex_count = n;
  model.conflicts.resize(n + g.size());
  model.occupies.resize(n + g.size());
  for (Vertex v = 0; v < n; ++v) {
    model.occupies[v] = {v, -1};
    for (const auto& inc : g.incident(v)) {
      model.conflicts[v].push_back(inc.neighbor);
      model.conflicts[v].push_back(n + inc.edge);
    }
  }
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    auto& list = model.conflicts[n + id];
    model.occupies[n + id] = {e.u, e.v};
    list.push_back(e.u);
    list.push_back(e.v);
    for (Vertex end : {e.u, e.v})
      for (const auto& inc : g.incident(end))
        if (inc.edge != id) list.push_back(n + inc.edge);
  }
  for (auto& list : model.conflicts) std::sort(list.begin(), list.end());
  return model;
}

ConflictModel line_model(const Graph& g) {
  ConflictModel model;
  model.vertex_count = g.order();
  model.conflicts.resize(g.size());
  model.occupies.resize(g.size());
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    model.occupies[id] = {e.u, e.v};
    for (Vertex end : {e.u, e.v})
      for (const auto& inc : g.incident(end))
        if (inc.edge != id) model.conflicts[id].push_back(inc.edge);
    std::sort(model.conflicts[id].begin(), model.conflicts[id].end());
  }
  return model;
}

namespace {

class Dsatur {
 public:
  Dsatur(const ConflictModel& model, int palette, const SearchLimits& limits)
      : model_(model),
        limits_(limits),
        palette_(palette),
        m_(model.size()),
        color_(m_, 0),
        forbidden_(static_cast<std::size_t>(m_) * (palette + 1), 0),
        saturation_(m_, 0),
        usage_(palette + 1, 0),
        occupied_(static_cast<std::size_t>(palette + 1) * model.vertex_count, 0),
        free_(palette + 1, model.vertex_count) {}

  /// Applies fixed colors; false when they already conflict.
  bool seed(std::span<const int> fixed) {
    bool ok = true;
    for (int e = 0; e < m_; ++e) {
      if (e >= static_cast<int>(fixed.size()) || fixed[e] <= 0) {
        demand_ += occupancy(e);
        ++uncolored_;
        if (model_.is_vertex_element(e)) ++uncolored_vertices_;
        continue;
      }
      if (fixed[e] > palette_) return false;
    }
    for (int e = 0; e < m_ && e < static_cast<int>(fixed.size()); ++e) {
      if (fixed[e] <= 0) continue;
      if (forbidden(e, fixed[e]) > 0) ok = false;
      assign(e, fixed[e]);
    }
    return ok;
  }

  SearchStatus solve() {
    if (uncolored_ == 0) return SearchStatus::Found;
    if (wiped_out() || !capacity_ok()) return SearchStatus::Infeasible;
    const int e = select();
    bool tried_unused = false;
    for (int c = 1; c <= palette_; ++c) {
      if (forbidden(e, c) > 0) continue;
      if (usage_[c] == 0) {
        if (tried_unused) continue;
        tried_unused = true;
      }
      if (++nodes_ > limits_.node_budget) return SearchStatus::BudgetExhausted;
      if ((nodes_ & 0xFFF) == 0 && limits_.stop.stop_requested()) return SearchStatus::Cancelled;
      if ((nodes_ & 0xFFFFF) == 0 && limits_.progress) limits_.progress(nodes_);
      mark_uncolored(e, false);
      assign(e, c);
      SearchStatus st = solve();
      if (st != SearchStatus::Infeasible) return st;
      unassign(e, c);
      mark_uncolored(e, true);
    }
    return SearchStatus::Infeasible;
  }

  /// First-fit DSATUR without backtracking; requires a palette above the max conflict degree.
  void greedy() {
    while (uncolored_ > 0) {
      const int e = select();
      int c = 1;
      while (forbidden(e, c) > 0) ++c;
      mark_uncolored(e, false);
      assign(e, c);
    }
  }

  const std::vector<int>& colors() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int& forbidden(int e, int c) { return forbidden_[static_cast<std::size_t>(e) * (palette_ + 1) + c]; }
  int occupancy(int e) const { return model_.is_vertex_element(e) ? 1 : 2; }
  char& occupied(int c, int v) { return occupied_[static_cast<std::size_t>(c) * model_.vertex_count + v]; }

  void mark_uncolored(int e, bool uncolored) {
    const int delta = uncolored ? 1 : -1;
    uncolored_ += delta;
    demand_ += delta * occupancy(e);
    if (model_.is_vertex_element(e)) uncolored_vertices_ += delta;
  }

  void assign(int e, int c) {
    color_[e] = c;
    ++usage_[c];
    for (int f : model_.conflicts[e])
      if (forbidden(f, c)++ == 0) ++saturation_[f];
    for (int v : model_.occupies[e])
      if (v >= 0 && occupied(c, v)++ == 0) --free_[c];
  }

  void unassign(int e, int c) {
    color_[e] = 0;
    --usage_[c];
    for (int f : model_.conflicts[e])
      if (--forbidden(f, c) == 0) --saturation_[f];
    for (int v : model_.occupies[e])
      if (v >= 0 && --occupied(c, v) == 0) ++free_[c];
  }

  bool wiped_out() const {
    for (int e = 0; e < m_; ++e)
      if (color_[e] == 0 && saturation_[e] >= palette_) return true;
    return false;
  }

  // Future elements of color c occupy disjoint vertices not yet occupied by c.
  // Without a vertex element the added occupancy is even, which caps color c
  // at the even part of its free count.
  bool capacity_ok() {
    long long capacity = 0;
    int odd_fixable = 0;
    odd_colors_.clear();
    for (int c = 1; c <= palette_; ++c) {
      capacity += free_[c] & ~1;
      if (free_[c] & 1) odd_colors_.push_back(c);
    }
    if (!odd_colors_.empty() && uncolored_vertices_ > 0) {
      for (int c : odd_colors_) {
        for (int e = 0; e < model_.vertex_count && e < m_; ++e) {
          if (!model_.is_vertex_element(e) || color_[e] != 0) continue;
          if (forbidden(e, c) == 0) {
            ++odd_fixable;
            break;
          }
        }
      }
      capacity += std::min(odd_fixable, uncolored_vertices_);
    }
    return demand_ <= capacity;
  }

  int select() {
    int best = -1;
    for (int e = 0; e < m_; ++e) {
      if (color_[e] != 0) continue;
      if (best < 0 || saturation_[e] > saturation_[best] ||
          (saturation_[e] == saturation_[best] && model_.conflicts[e].size() > model_.conflicts[best].size()))
        best = e;
    }
    return best;
  }

  const ConflictModel& model_;
  const SearchLimits& limits_;
  int palette_;
  int m_;
  std::vector<int> color_;
  std::vector<int> forbidden_;
  std::vector<int> saturation_;
  std::vector<int> usage_;
  std::vector<char> occupied_;
  std::vector<int> free_;
  std::vector<int> odd_colors_;
  long long demand_ = 0;
  int uncolored_ = 0;
  int uncolored_vertices_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchOutcome color_with_palette(const ConflictModel& model, int palette, std::span<const int> fixed,
                                 const SearchLimits& limits) {
  if (palette < 0) throw precondition_error("negative palette");
  SearchOutcome out;
  Dsatur search(model, palette, limits);
  if (!search.seed(fixed)) {
    out.status = SearchStatus::Infeasible;
    return out;
  }
  out.status = search.solve();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::Found) out.colors = search.colors();
  return out;
}

std::vector<int> greedy_dsatur(const ConflictModel& model) {
  int max_degree = 0;
  for (const auto& list : model.conflicts) max_degree = std::max(max_degree, static_cast<int>(list.size()));
  SearchLimits limits;
  Dsatur search(model, max_degree + 1, limits);
  search.seed({});
  search.greedy();
  return search.colors();
}

}  // namespace totcol

namespace totcol {

SearchOutcome local_search_coloring(const ConflictModel& model, int palette, std::span<const int> initial,
                                    std::span<const char> frozen, const LocalSearchOptions& options) {
  if (palette < 1) throw precondition_error("local search needs a palette of at least one color");
  const int m = model.size();
  auto is_frozen = [&](int e) { return e < static_cast<int>(frozen.size()) && frozen[e]; };
  std::mt19937_64 rng(options.seed);
  std::vector<int> color(m);
  for (int e = 0; e < m; ++e) {
    const int c = e < static_cast<int>(initial.size()) ? initial[e] : 0;
    if (c >= 1 && c <= palette) {
      color[e] = c;
    } else {
      if (is_frozen(e)) throw precondition_error("frozen element without a color in range");
      color[e] = static_cast<int>(rng() % palette) + 1;
    }
  }

  const auto cell = [palette](int e, int c) { return static_cast<std::size_t>(e) * (palette + 1) + c; };
  std::vector<int> gamma(static_cast<std::size_t>(m) * (palette + 1), 0);
  std::vector<std::uint64_t> tabu(static_cast<std::size_t>(m) * (palette + 1), 0);
  long long conflicts = 0;
  for (int e = 0; e < m; ++e)
    for (int f : model.conflicts[e]) {
      ++gamma[cell(e, color[f])];
      if (f > e && color[f] == color[e]) ++conflicts;
    }

  SearchOutcome out;
  long long best = conflicts;
  std::vector<int> candidates;
  for (std::uint64_t iter = 1; conflicts > 0 && iter <= options.max_iterations; ++iter) {
    out.nodes = iter;
    int best_delta = 0;
    int move_e = -1;
    int move_c = 0;
    int ties = 0;
    for (int e = 0; e < m; ++e) {
      if (gamma[cell(e, color[e])] == 0 || is_frozen(e)) continue;
      const int now = gamma[cell(e, color[e])];
      for (int c = 1; c <= palette; ++c) {
        if (c == color[e]) continue;
        const int delta = gamma[cell(e, c)] - now;
        const bool allowed = tabu[cell(e, c)] < iter || conflicts + delta < best;
        if (!allowed) continue;
        if (move_e < 0 || delta < best_delta) {
          best_delta = delta;
          move_e = e;
          move_c = c;
          ties = 1;
        } else if (delta == best_delta && rng() % ++ties == 0) {
          move_e = e;
          move_c = c;
        }
      }
    }
    if (move_e < 0) continue;
    const int old = color[move_e];
    for (int f : model.conflicts[move_e]) {
      --gamma[cell(f, old)];
      ++gamma[cell(f, move_c)];
    }
    color[move_e] = move_c;
    conflicts += best_delta;
    best = std::min(best, conflicts);
    tabu[cell(move_e, old)] = iter + static_cast<std::uint64_t>(rng() % 10) + static_cast<std::uint64_t>(0.6 * conflicts);
  }
  if (conflicts == 0) {
    out.status = SearchStatus::Found;
    out.colors = std::move(color);
  } else {
    out.status = SearchStatus::BudgetExhausted;
  }
  return out;
}

}  // namespace totcol
