#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "totcol/complete_total.hpp"
#include "totcol/constructions.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/number_theory.hpp"
#include "totcol/oracle.hpp"
#include "totcol/poc.hpp"
#include "totcol/verify.hpp"

using namespace totcol;

namespace {

bool valid_matrix(const ColorMatrix& m, int k, int max_colors) {
  const Graph g = build_power_of_cycle(m.size(), k);
  const TotalColoring c = matrix_to_coloring(g, m);
  return support::naive_valid(g, c) && c.colors_used() <= max_colors;
}

bool valid_result(const ConstructionResult& r) {
  return support::naive_valid(r.graph, r.coloring) && r.colors_used == r.coloring.colors_used() &&
         r.colors_used <= r.budget;
}

MockThresholdScript random_script(int n, std::mt19937_64& rng) {
  MockThresholdScript script;
  for (int i = 0; i < n; ++i) {
    MockStep step;
    step.kind = static_cast<MockStep::Kind>(i == 0 ? 0 : rng() % 4);
    if (step.kind == MockStep::Kind::Pendant || step.kind == MockStep::Kind::CoDominant) step.ref = static_cast<int>(rng() % i);
    script.push_back(step);
  }
  return script;
}

}  // namespace

TEST_CASE("displayed matrices are reproduced cell for cell") {
  CHECK(poc_base(10) == support::fixture("c10_2"));
  CHECK(poc_block(20, 4) == support::fixture("c20"));
  CHECK(poc_block(18, 5) == support::fixture("c18"));
  CHECK(poc_base(14) == support::fixture("c14"));

  const ModifiedMatrix c13 = poc_shrink(support::fixture("c14"), 3);
  CHECK(c13.matrix == support::fixture("c13"));
  CHECK(c13.notes.empty());
  for (int t = 0; t < 3; ++t) CHECK(c13.matrix.at(t, 10 + t) == 8);

  const ModifiedMatrix c15 = poc_grow(support::fixture("c14"), 3);
  CHECK(c15.matrix == support::fixture("c15"));
  CHECK(c15.notes.empty());
}

TEST_CASE("poc_base") {
  CHECK_THROWS_AS(poc_base(2), precondition_error);
  CHECK_THROWS_AS(poc_base(12), precondition_error);
  CHECK(valid_matrix(poc_base(6), 1, 3));

  // Row i touches residues i +- 1..k mod q, all distinct and different from i mod q.
  for (int n = 6; n <= 400; n += 4) {
    const int k = (n - 2) / 4, q = 2 * k + 1;
    const ColorMatrix m = poc_base(n);
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i) {
      std::set<int> residues{i % q};
      for (int d = 1; d <= k; ++d) {
        distinct = distinct && residues.insert((i + d) % n % q).second;
        distinct = distinct && residues.insert((i - d + n) % n % q).second;
      }
    }
    CHECK(distinct);
    std::set<int> colors;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.at(i, j)) colors.insert(m.at(i, j));
    CHECK(colors.size() == static_cast<std::size_t>(q));
  }
}

TEST_CASE("poc_augment") {
  const Graph c10_3 = build_power_of_cycle(10, 3);
  const TotalColoring c = poc_augment(10, 3);
  CHECK(support::naive_valid(c10_3, c));
  CHECK(c.colors_used() == 7);
  CHECK(coloring_to_matrix(build_power_of_cycle(10, 2), poc_augment(10, 2)) == poc_base(10));
  CHECK_THROWS_AS(poc_augment(14, 5), precondition_error);
  CHECK_THROWS_AS(poc_augment(12, 3), precondition_error);

  for (int n = 6; n <= 62; n += 4)
    for (int k = (n - 2) / 4; 2 * k < n; ++k) {
      bool coprime = true;
      for (int x = (n - 2) / 4 + 1; x <= k; ++x) coprime = coprime && std::gcd(n, x) == 1;
      if (!coprime) continue;
      const TotalColoring a = poc_augment(n, k);
      CHECK(verify(build_power_of_cycle(n, k), a).is_valid());
      CHECK(a.colors_used() == 2 * k + 1);
    }
}

TEST_CASE("poc_block") {
  const auto p = find_block_params(10, 2);
  REQUIRE(p);
  CHECK(p->s == 2);
  CHECK(p->m == 2);
  CHECK(p->i == 3);
  const ColorMatrix m = poc_block(10, 2);
  CHECK(valid_matrix(m, 2, 5));
  CHECK(matrix_to_coloring(build_power_of_cycle(10, 2), m).colors_used() ==
        matrix_to_coloring(build_power_of_cycle(10, 2), poc_base(10)).colors_used());

  CHECK_THROWS_AS(poc_block(BlockParams{3, 2, 1}), precondition_error);
  CHECK_THROWS_AS(poc_block(BlockParams{2, 2, 4}), precondition_error);
  CHECK_THROWS_AS(poc_block(BlockParams{2, 0, 1}), precondition_error);
  CHECK_THROWS_AS(poc_block(14, 2), precondition_error);
  // base(n) is the s = 2, i = m + 1 case of the block layout.
  CHECK(poc_block(BlockParams{2, 3, 4}) == poc_base(14));
}

TEST_CASE("shrink and grow on small cases") {
  const ColorMatrix c6 = poc_base(6);
  const ModifiedMatrix c5 = poc_shrink(c6, 1);
  CHECK(valid_matrix(c5.matrix, 1, 4));
  const ModifiedMatrix c7 = poc_grow(c6, 1);
  CHECK(valid_matrix(c7.matrix, 1, 4));

  ColorMatrix broken = c6;
  broken.set(0, 0, 2);
  CHECK_THROWS_AS(poc_shrink(broken, 1), precondition_error);
  CHECK_THROWS_AS(poc_grow(c6, 2), precondition_error);
  CHECK_THROWS_AS(poc_shrink(poc_block(20, 4), 3), precondition_error);
}

TEST_CASE("repair is recorded when the literal rule conflicts") {
  // i = 1 bases leave vertex conflicts after shrinking.
  const ColorMatrix base = poc_block(BlockParams{2, 3, 1});
  const ModifiedMatrix r = poc_shrink(base, 6);
  CHECK(valid_matrix(r.matrix, 6, 14));
  CHECK(!r.notes.empty());
}

TEST_CASE("any odd order") {
  const ConstructionResult c13 = poc_any_odd(13, 3);
  CHECK(valid_result(c13));
  CHECK(c13.colors_used <= 8);
  CHECK(c13.method.starts_with("shrink"));

  const ConstructionResult c15 = poc_any_odd(15, 3);
  CHECK(valid_result(c15));
  CHECK(c15.colors_used <= 8);
  CHECK(c15.method.starts_with("grow"));

  const ConstructionResult c5 = poc_any_odd(5, 1);
  CHECK(valid_result(c5));
  CHECK(c5.colors_used <= 5);
  CHECK(c5.colors_used >= support::brute_total_chromatic(build_power_of_cycle(5, 1)));

  CHECK_THROWS_AS(poc_any_odd(14, 3), precondition_error);
  CHECK_THROWS_AS(poc_any_odd(13, 7), precondition_error);

  for (int n = 5; n <= 41; n += 2)
    for (int k = 1; 2 * k < n; ++k) {
      const ConstructionResult r = poc_any_odd(n, k);
      CHECK(verify(r.graph, r.coloring).is_valid());
      CHECK(r.colors_used <= r.budget);
      CHECK(r.budget <= 2 * k + 3);
      if (r.budget == 2 * k + 3) CHECK(!r.notes.empty());
    }
}

TEST_CASE("Cayley extension") {
  const GroupTable z10 = GroupTable::cyclic(10);
  const std::vector<int> s{1, 9};
  const Graph c10 = build_cayley_from_table(z10, s);
  const TotalColoring base = total_chromatic_exact(c10).witness;

  const ConstructionResult r = cayley_extend(c10, base, z10, s, std::vector<int>{3, 7});
  CHECK(valid_result(r));
  CHECK(r.graph == build_circulant(10, std::vector<int>{1, 3}));
  CHECK(r.budget == base.palette() + 2);

  const ConstructionResult same = cayley_extend(c10, base, z10, s, std::vector<int>{});
  CHECK(same.coloring == base);

  CHECK_THROWS_AS(cayley_extend(c10, base, z10, s, std::vector<int>{5}), precondition_error);
  CHECK_THROWS_AS(cayley_extend(c10, base, z10, s, std::vector<int>{3}), precondition_error);
  CHECK_THROWS_AS(cayley_extend(c10, base, z10, s, std::vector<int>{2, 8}), precondition_error);
  CHECK_THROWS_AS(cayley_extend(c10, base, z10, s, std::vector<int>{1, 9}), precondition_error);
  CHECK_THROWS_AS(cayley_extend(c10, base, z10, s, std::vector<int>{3, 7}, 2), precondition_error);

  // Z2 x Z4, (x, y) encoded as 4x + y: a perfect matching extended by every order-4 element.
  const GroupTable g8 = GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(4));
  const std::vector<int> s8{4};
  const Graph base8 = build_cayley_from_table(g8, s8);
  const ConstructionResult r8 =
      cayley_extend(base8, total_chromatic_exact(base8).witness, g8, s8, std::vector<int>{1, 3, 5, 7});
  CHECK(valid_result(r8));
}

TEST_CASE("unitary Cayley constructions") {
  const ConstructionResult x7 = unitary_total(7);
  CHECK(valid_result(x7));
  CHECK(x7.colors_used <= 8);
  CHECK(x7.method == "unitary-prime");

  const ConstructionResult x8 = unitary_total(8);
  CHECK(valid_result(x8));
  CHECK(x8.colors_used <= 6);

  const ConstructionResult x15 = unitary_total(15);
  CHECK(valid_result(x15));
  CHECK(x15.colors_used <= 10);
  // Each block {3t, 3t+1, 3t+2} is a triangle colored like complete_total(3).
  const TotalColoring k3 = complete_total(3);
  for (int t = 0; t < 5; ++t)
    for (int a = 0; a < 3; ++a) {
      CHECK(x15.coloring.vertex_colors[3 * t + a] == k3.vertex_colors[a]);
      for (int b = a + 1; b < 3; ++b) CHECK(x15.coloring.edge_colors.at({3 * t + a, 3 * t + b}) == k3.edge_colors.at({a, b}));
    }

  CHECK_THROWS_AS(unitary_total(1), precondition_error);
  for (int n = 2; n <= 30; ++n) {
    const ConstructionResult r = unitary_total(n);
    CHECK(valid_result(r));
    CHECK(r.budget == euler_phi(n) + 2);
  }
}

TEST_CASE("mock threshold constructions") {
  const MockThresholdScript k4 = parse_script("I,D,D,D");
  const ConstructionResult r = mock_threshold_total(build_mock_threshold(k4), k4);
  CHECK(valid_result(r));
  CHECK(r.colors_used <= 5);
  CHECK(support::brute_total_chromatic(complete_graph(4)) == 5);

  const MockThresholdScript single = parse_script("I");
  CHECK(mock_threshold_total(build_mock_threshold(single), single).colors_used == 1);

  CHECK_THROWS_AS(mock_threshold_total(complete_graph(4), parse_script("I,I,I,I")), precondition_error);

  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 100; ++trial) {
    const MockThresholdScript script = random_script(8, rng);
    const Graph g = build_mock_threshold(script);
    const ConstructionResult m = mock_threshold_total(g, script);
    CHECK(valid_result(m));
    CHECK(m.colors_used <= g.max_degree() + 2);
  }
}

TEST_CASE("odd graph constructions") {
  const ConstructionResult o2 = odd_graph_total(2);
  CHECK(valid_result(o2));
  CHECK(o2.colors_used <= 4);

  const ConstructionResult o3 = odd_graph_total(3);
  CHECK(valid_result(o3));
  CHECK(o3.colors_used <= 5);

  const int binom[] = {0, 0, 1, 4, 15, 56};  // C(2m-2, m-2)
  for (int m = 2; m <= 5; ++m) {
    const ConstructionResult r = odd_graph_total(m);
    CHECK(valid_result(r));
    CHECK(r.budget == m + 2);
    const int i_size = static_cast<int>(
        std::count(r.coloring.vertex_colors.begin(), r.coloring.vertex_colors.end(), m + 1));
    CHECK(i_size == binom[m]);
  }
  CHECK_THROWS_AS(odd_graph_total(1), precondition_error);
}
