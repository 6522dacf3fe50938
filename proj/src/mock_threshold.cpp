#include "totcol/mock_threshold.hpp"

#include <set>
#include <sstream>

#include "totcol/error.hpp"

namespace totcol {

void validate_script(const MockThresholdScript& script) {
  for (int i = 0; i < static_cast<int>(script.size()); ++i) {
    const MockStep& step = script[i];
    const bool needs_ref = step.kind == MockStep::Kind::Pendant || step.kind == MockStep::Kind::CoDominant;
    if (needs_ref && (step.ref < 0 || step.ref >= i))
      throw precondition_error("step " + std::to_string(i) + " references vertex " + std::to_string(step.ref) +
                               " which does not precede it");
  }
}

Graph build_mock_threshold(const MockThresholdScript& script) {
  validate_script(script);
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(script.size()); ++i) {
    const MockStep& step = script[i];
    switch (step.kind) {
      case MockStep::Kind::Isolated:
        break;
      case MockStep::Kind::Pendant:
        edges.push_back({step.ref, i});
        break;
      case MockStep::Kind::CoDominant:
        for (int j = 0; j < i; ++j)
          if (j != step.ref) edges.push_back({j, i});
        break;
      case MockStep::Kind::Dominant:
        for (int j = 0; j < i; ++j) edges.push_back({j, i});
        break;
    }
  }
  return Graph(static_cast<int>(script.size()), std::move(edges));
}

namespace {

class Peeler {
 public:
  explicit Peeler(const Graph& g) : g_(g), alive_(g.order(), true), degree_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) degree_[v] = g.degree(v);
  }

  bool run(int remaining) {
    if (remaining == 0) return true;
    if (failed_.contains(alive_)) return false;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive_[v]) continue;
      const int d = degree_[v];
      if (d != 0 && d != 1 && d != remaining - 2 && d != remaining - 1) continue;
      remove(v);
      peeled_.push_back(v);
      if (run(remaining - 1)) return true;
      peeled_.pop_back();
      restore(v);
    }
    failed_.insert(alive_);
    return false;
  }

  // Peel order reversed is the build order.
  std::vector<Vertex> build_order() const { return {peeled_.rbegin(), peeled_.rend()}; }

 private:
  void remove(Vertex v) {
    alive_[v] = false;
    for (const auto& inc : g_.incident(v))
      if (alive_[inc.neighbor]) --degree_[inc.neighbor];
  }
  void restore(Vertex v) {
    for (const auto& inc : g_.incident(v))
      if (alive_[inc.neighbor]) ++degree_[inc.neighbor];
    alive_[v] = true;
  }

  const Graph& g_;
  std::vector<bool> alive_;
  std::vector<int> degree_;
  std::vector<Vertex> peeled_;
  std::set<std::vector<bool>> failed_;
};

}  // namespace

std::optional<MockThresholdOrdering> recognize_mock_threshold(const Graph& g) {
  Peeler peeler(g);
  if (!peeler.run(g.order())) return std::nullopt;

  MockThresholdOrdering out;
  out.order = peeler.build_order();
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    std::vector<int> earlier_neighbors;
    for (int j = 0; j < i; ++j)
      if (g.adjacent(out.order[i], out.order[j])) earlier_neighbors.push_back(j);
    const int d = static_cast<int>(earlier_neighbors.size());
    MockStep step;
    if (d == 0) {
      step.kind = MockStep::Kind::Isolated;
    } else if (d == i) {
      step.kind = MockStep::Kind::Dominant;
    } else if (d == 1) {
      step = {MockStep::Kind::Pendant, earlier_neighbors.front()};
    } else {
      int missing = 0;
      while (missing < i && g.adjacent(out.order[i], out.order[missing])) ++missing;
      step = {MockStep::Kind::CoDominant, missing};
    }
    out.script.push_back(step);
  }
  return out;
}

std::string format_script(const MockThresholdScript& script) {
  std::ostringstream os;
  for (std::size_t i = 0; i < script.size(); ++i) {
    if (i) os << ',';
    switch (script[i].kind) {
      case MockStep::Kind::Isolated: os << 'I'; break;
      case MockStep::Kind::Pendant: os << 'P' << script[i].ref; break;
      case MockStep::Kind::CoDominant: os << 'C' << script[i].ref; break;
      case MockStep::Kind::Dominant: os << 'D'; break;
    }
  }
  return os.str();
}

MockThresholdScript parse_script(const std::string& text) {
  MockThresholdScript script;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    if (token.empty()) throw parse_error("empty step in mock threshold script");
    MockStep step;
    switch (token[0]) {
      case 'I': step.kind = MockStep::Kind::Isolated; break;
      case 'D': step.kind = MockStep::Kind::Dominant; break;
      case 'P': step.kind = MockStep::Kind::Pendant; break;
      case 'C': step.kind = MockStep::Kind::CoDominant; break;
      default: throw parse_error("unknown mock threshold step '" + token + "'");
    }
    const bool needs_ref = step.kind == MockStep::Kind::Pendant || step.kind == MockStep::Kind::CoDominant;
    if (needs_ref) {
      try {
        std::size_t used = 0;
        step.ref = std::stoi(token.substr(1), &used);
        if (used + 1 != token.size()) throw parse_error("trailing characters in step '" + token + "'");
      } catch (const std::logic_error&) {
        throw parse_error("step '" + token + "' needs a numeric reference");
      }
    } else if (token.size() != 1) {
      throw parse_error("step '" + token + "' takes no reference");
    }
    script.push_back(step);
  }
  return script;
}

}  // namespace totcol
