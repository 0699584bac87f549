#include "doctest.h"

#include <random>

#include "cliquemin/distance.hpp"
#include "cliquemin/family.hpp"
#include "oracles.hpp"

using namespace cliquemin;

TEST_CASE("edit and cut distance examples") {
  CHECK(edit_distance(Graph::cycle(5), Graph::path(5)) == 1);
  CHECK(edit_distance(Graph::complete(6), Graph(6)) == 15);
  for (int n = 1; n <= 7; ++n)
    CHECK(cut_discrepancy(Graph::complete(n), Graph(n)) == Rational(n - 1, n));
  CHECK(cut_discrepancy(Graph::cycle(5), Graph::cycle(5).relabel(std::vector<int>{1, 2, 3, 4, 0})) == Rational(0));
  CHECK_THROWS_AS(edit_distance(Graph(10), Graph(10)), std::domain_error);
  CHECK_THROWS(edit_distance(Graph(4), Graph(5)));
}

TEST_CASE("exact distances agree with brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    std::vector<int> phi;
    const long d = edit_distance(g, h, SearchMode::exact, phi);
    CHECK(d == oracle::edit_by_permutations(g, h));
    long check = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        check += g.has_edge(u, v) != h.has_edge(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]);
    CHECK(check == d);
    if (n <= 6) CHECK(cut_discrepancy(g, h) == oracle::cut_by_pairs(g, h));
  }
}

TEST_CASE("pseudometric properties and heuristic bounds") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + trial % 5;
    const Graph a = oracle::random_graph(n, 0.4, rng), b = oracle::random_graph(n, 0.5, rng),
                c = oracle::random_graph(n, 0.6, rng);
    CHECK(edit_distance(a, a) == 0);
    CHECK(edit_distance(a, b) == edit_distance(b, a));
    CHECK(edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c));
    CHECK(edit_distance(a, b, SearchMode::heuristic) >= edit_distance(a, b));
    CHECK(cut_discrepancy(a, a).sign() == 0);
    CHECK(cut_discrepancy(a, b) == cut_discrepancy(b, a));
    CHECK(cut_discrepancy(a, c) <= cut_discrepancy(a, b) + cut_discrepancy(b, c));
    CHECK(cut_discrepancy(a, b, SearchMode::heuristic) <= cut_discrepancy(a, b));
  }
}

TEST_CASE("distance to the family") {
  // family members are at distance 0
  const FamilyGraph f = construct_H_alpha_n(Rational(2, 3), 6);
  CHECK(distance_to_family(f.graph, 3).distance == 0);
  CHECK(distance_to_family(Graph::turan(2, 7), 3).distance == 0);
  CHECK(distance_to_family(f.graph.relabel(std::vector<int>{5, 3, 1, 0, 2, 4}), 3).distance == 0);

  // brute-force check against every family shape, as an upper bound on the answer
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 5 + trial % 2;
    const Graph g = oracle::random_graph(n, 0.6, rng);
    const FamilyDistance d = distance_to_family(g, 3);
    CHECK(d.witness.graph.size() == g.size());
    CHECK(oracle::edit_by_permutations(g, d.witness.graph) == d.distance);
    long best = -1;
    for_each_family_shape(n, g.size(), [&](const std::vector<int>& parts, long) {
      const FamilyGraph m = construct_family_member(n, g.size(), static_cast<int>(parts.size()), parts);
      const long e = oracle::edit_by_permutations(g, m.graph);
      if (best < 0 || e < best) best = e;
    });
    CHECK(d.distance <= best);
    CHECK(distance_to_family(g, 3, SearchMode::heuristic).distance >= d.distance);
  }
  CHECK_THROWS(distance_to_family(Graph(4), 2));
}
