#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/group_table.hpp"
#include "totcol/mock_threshold.hpp"
#include "totcol/number_theory.hpp"

using namespace totcol;

namespace {

int girth(const Graph& g) {
  int best = 1 << 30;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (const auto& inc : g.incident(x)) {
        if (dist[inc.neighbor] < 0) {
          dist[inc.neighbor] = dist[x] + 1;
          parent[inc.neighbor] = x;
          q.push(inc.neighbor);
        } else if (parent[x] != inc.neighbor) {
          best = std::min(best, dist[x] + dist[inc.neighbor] + 1);
        }
      }
    }
  }
  return best;
}

bool rotation_invariant(const Graph& g) {
  const int n = g.order();
  for (const Edge& e : g.edges())
    if (!g.adjacent((e.u + 1) % n, (e.v + 1) % n)) return false;
  return true;
}

MockThresholdScript random_script(int n, std::mt19937_64& rng) {
  MockThresholdScript script;
  for (int i = 0; i < n; ++i) {
    const int kind = i == 0 ? (rng() % 2 ? 0 : 3) : static_cast<int>(rng() % 4);
    MockStep step;
    step.kind = static_cast<MockStep::Kind>(kind);
    if (step.kind == MockStep::Kind::Pendant || step.kind == MockStep::Kind::CoDominant)
      step.ref = static_cast<int>(rng() % i);
    script.push_back(step);
  }
  return script;
}

}  // namespace

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), precondition_error);
  const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge_id(3, 2) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g == Graph(4, {{0, 1}, {1, 2}, {3, 2}}));
}

TEST_CASE("C10^2 adjacency matches the displayed matrix") {
  const std::vector<int> distances{1, 2};
  const Graph g = build_circulant(10, distances);
  const auto m = support::fixture("c10_2");
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      if (i != j) CHECK(g.adjacent(i, j) == (m.at(i, j) != 0));
}

TEST_CASE("circulant corner cases") {
  CHECK(build_circulant(5, std::vector<int>{}).size() == 0);
  CHECK(build_circulant(6, std::vector<int>{1, 2, 3}) == complete_graph(6));
  // Distance n/2 contributes one neighbor, not two.
  const Graph g = build_circulant(8, std::vector<int>{4});
  CHECK(g.is_regular());
  CHECK(g.max_degree() == 1);
  CHECK_THROWS_AS(build_circulant(8, std::vector<int>{5}), precondition_error);
  CHECK_THROWS_AS(build_circulant(8, std::vector<int>{0}), precondition_error);
}

TEST_CASE("powers of cycles") {
  CHECK(build_power_of_cycle(10, 2).size() == 20);
  CHECK(build_power_of_cycle(7, 2).size() == 14);
  const Graph c5 = build_power_of_cycle(5, 1);
  CHECK(c5.size() == 5);
  CHECK(c5.max_degree() == 2);
  CHECK_THROWS_AS(build_power_of_cycle(10, 5), precondition_error);
  CHECK_THROWS_AS(build_power_of_cycle(10, 0), precondition_error);
  for (int n = 3; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const Graph g = build_power_of_cycle(n, k);
      CHECK(g.is_regular());
      CHECK(g.max_degree() == 2 * k);
      CHECK(rotation_invariant(g));
    }
}

TEST_CASE("unitary Cayley graphs") {
  CHECK(build_unitary_cayley(5) == complete_graph(5));
  CHECK(build_unitary_cayley(2) == complete_graph(2));
  CHECK_THROWS_AS(build_unitary_cayley(1), precondition_error);
  const Graph x8 = build_unitary_cayley(8);
  CHECK(x8.max_degree() == 4);
  const auto parts = bipartition(x8);
  REQUIRE(parts);
  for (int v = 0; v < 8; ++v) CHECK((*parts)[v] == ((*parts)[0] ^ (v % 2)));
  for (int n = 2; n <= 40; ++n) {
    const Graph g = build_unitary_cayley(n);
    CHECK(g.is_regular());
    CHECK(g.max_degree() == support::gcd_count_phi(n));
    if (is_prime(n)) CHECK(g == complete_graph(n));
    if (n % 2 == 0) CHECK(bipartition(g).has_value());
  }
}

TEST_CASE("Kneser and odd graphs") {
  CHECK(build_odd_graph(2).graph == complete_graph(3));
  const LabeledGraph petersen = build_odd_graph(3);
  CHECK(petersen.graph.order() == 10);
  CHECK(petersen.graph.is_regular());
  CHECK(petersen.graph.max_degree() == 3);
  CHECK(girth(petersen.graph) == 5);

  const Graph k42 = build_kneser(4, 2).graph;
  CHECK(k42.order() == 6);
  CHECK(k42.size() == 3);
  CHECK(k42.max_degree() == 1);
  CHECK(k42.min_degree() == 1);

  const auto labels = build_kneser(5, 2).labels;
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  CHECK(labels.front() == std::vector<int>{0, 1});

  const int binom[] = {0, 0, 3, 10, 35, 126};
  for (int m = 2; m <= 5; ++m) {
    const Graph g = build_odd_graph(m).graph;
    CHECK(g.order() == binom[m]);
    CHECK(g.is_regular());
    CHECK(g.max_degree() == m);
  }
  CHECK_THROWS_AS(build_odd_graph(1), precondition_error);
  CHECK_THROWS_AS(build_kneser(3, 4), precondition_error);
  CHECK_THROWS_AS(build_kneser(3, 0), precondition_error);
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(15) == 8);
  CHECK(euler_phi(1) == 1);
  CHECK(smallest_prime_factor(35) == 5);
  CHECK(smallest_prime_factor(49) == 7);
  for (int n = 1; n <= 200; ++n) CHECK(euler_phi(n) == support::gcd_count_phi(n));
}

TEST_CASE("Cayley graphs from multiplication tables") {
  const GroupTable z4 = GroupTable::cyclic(4);
  CHECK(build_cayley_from_table(z4, std::vector<int>{1, 3}) == build_power_of_cycle(4, 1));
  const GroupTable klein = GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
  CHECK(build_cayley_from_table(klein, std::vector<int>{1, 2, 3}) == complete_graph(4));
  const Graph triangles = build_cayley_from_table(GroupTable::cyclic(6), std::vector<int>{2, 4});
  CHECK(triangles.size() == 6);
  CHECK(!triangles.adjacent(0, 1));
  CHECK(triangles.adjacent(1, 3));

  CHECK(order_two_element(GroupTable::cyclic(6)) == 3);
  CHECK(!order_two_element(GroupTable::cyclic(9)).has_value());

  CHECK_THROWS_AS(build_cayley_from_table(z4, std::vector<int>{1}), precondition_error);
  CHECK_THROWS_AS(build_cayley_from_table(z4, std::vector<int>{0, 2}), precondition_error);
  // Not associative: a Latin square that is not a group.
  CHECK_THROWS_AS(GroupTable({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                  precondition_error);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 1}}), precondition_error);
}

TEST_CASE("mock threshold builder follows the step definitions") {
  CHECK(build_mock_threshold(parse_script("I")).order() == 1);
  CHECK(build_mock_threshold(parse_script("I,D,D,D")) == complete_graph(4));
  const Graph g = build_mock_threshold(parse_script("I,I,P1,C1"));
  CHECK(g == Graph(4, {{1, 2}, {0, 3}, {2, 3}}));
  CHECK_THROWS_AS(validate_script({{MockStep::Kind::Isolated, -1}, {MockStep::Kind::Pendant, 1}}), precondition_error);
  CHECK_THROWS_AS(parse_script("I,P"), parse_error);
  CHECK(format_script(parse_script("I,D,P0,C1")) == "I,D,P0,C1");
}

TEST_CASE("mock threshold recognition") {
  const auto k4 = recognize_mock_threshold(complete_graph(4));
  REQUIRE(k4);
  for (std::size_t i = 1; i < k4->script.size(); ++i) CHECK(k4->script[i].kind == MockStep::Kind::Dominant);

  CHECK(!recognize_mock_threshold(build_power_of_cycle(5, 1)).has_value());

  // Center last, so lowest-index-first peels the leaves.
  const auto star = recognize_mock_threshold(Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
  REQUIRE(star);
  CHECK(std::count_if(star->script.begin(), star->script.end(),
                      [](const MockStep& s) { return s.kind == MockStep::Kind::Pendant; }) >= 1);
}

TEST_CASE("recognition round-trips random scripts") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = build_mock_threshold(random_script(n, rng));
    // Shuffle labels so recognition cannot lean on the build order.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = relabel(g, perm);
    const auto found = recognize_mock_threshold(shuffled);
    REQUIRE(found);
    CHECK(relabel(build_mock_threshold(found->script), found->order) == shuffled);
  }
}
