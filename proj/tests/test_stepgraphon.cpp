#include "doctest.h"

#include <random>

#include "cliquemin/scallop.hpp"
#include "cliquemin/stepgraphon.hpp"
#include "alpha_grid.hpp"
#include "oracles.hpp"

using namespace cliquemin;

namespace {

using RGraphon = StepGraphon<Rational>;

RGraphon two_part(Rational m0, Rational v00, Rational v01, Rational v11) {
  RGraphon::Vector mu(2);
  mu << m0, Rational(1) - m0;
  RGraphon::Matrix w(2, 2);
  w << v00, v01, v01, v11;
  return {mu, w};
}

template <class S>
std::vector<S> row_weight(const StepGraphon<S>& w, const std::vector<int>& roots) {
  std::vector<S> out;
  for (int j = 0; j < w.parts(); ++j) {
    S x = w.measure(j);
    for (int root : roots) x = x * w.value(root, j);
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("validation") {
  RGraphon::Vector mu(2);
  mu << Rational(1, 2), Rational(1, 3);
  CHECK_THROWS_AS(RGraphon(mu, RGraphon::Matrix::Constant(2, 2, Rational(0))), std::domain_error);
  CHECK_THROWS_AS(two_part(Rational(1, 2), Rational(0), Rational(3, 2), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(two_part(Rational(0), Rational(0), Rational(1), Rational(0)), std::domain_error);
  RGraphon::Matrix asym(2, 2);
  asym << Rational(0), Rational(1), Rational(0), Rational(0);
  mu << Rational(1, 2), Rational(1, 2);
  CHECK_THROWS_AS(RGraphon(mu, asym), std::domain_error);
}

TEST_CASE("density examples") {
  const auto k2 = from_graph(Graph::complete(2));
  CHECK(k2.measure(0) == Rational(1, 2));
  CHECK(k2.value(0, 1) == Rational(1));
  CHECK(k2.value(0, 0) == Rational(0));
  for (int r = 1; r <= 6; ++r) CHECK(clique_density(constant_graphon(Rational(1)), r) == Rational(1));
  CHECK(clique_density(from_graph(Graph::turan(3, 3)), 3) == Rational(2, 9));
  CHECK(clique_density(from_graph(Graph::turan(3, 3)), 3) == kappa(3, 3, Rational(1, 3)));
  CHECK(clique_density(from_graph(Graph::turan(2, 4)), 3) == Rational(0));
  CHECK(degree(constant_graphon(Rational(1)), 0) == Rational(1));
  for (int v = 0; v < 4; ++v) CHECK(degree(from_graph(Graph::cycle(4)), v) == Rational(1, 2));
  const auto half = two_part(Rational(1, 3), Rational(1, 2), Rational(1, 2), Rational(1, 2));
  CHECK(degree(half, 0) == Rational(1, 2));
  CHECK(degree(half, 1) == Rational(1, 2));
  CHECK_THROWS(degree(half, 2));
  CHECK_THROWS_AS(clique_density(half, 0), std::domain_error);
}

TEST_CASE("graph graphons reproduce homomorphism densities") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : {Graph::complete(n), Graph::cycle(std::max(n, 3)), Graph::path(n), Graph(n)})
      for (int r = 1; r <= 5; ++r) CHECK(clique_density(from_graph(g), r) == hom_density(g, r));
  }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(6, 0.55, rng);
    for (int r = 2; r <= 5; ++r) CHECK(clique_density(from_graph(g), r) == hom_density(g, r));
  }
}

TEST_CASE("clique densities agree with direct tuple summation") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = oracle::random_graphon(1 + trial % 6, rng);
    for (int r = 1; r <= 4; ++r) CHECK(clique_density(w, r) == oracle::clique_by_tuples(w, r));
  }
  const auto big = oracle::random_graphon(60, rng);
  CHECK_THROWS_AS(clique_sum(big.values(), big.measures(), 6, 1000), std::domain_error);
}

TEST_CASE("rooted densities") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = oracle::random_graphon(1 + trial % 5, rng);
    for (int x = 0; x < w.parts(); ++x) {
      CHECK(rooted_clique(w, x, 2) == degree(w, x));
      for (int t = 1; t <= 4; ++t) CHECK(rooted_clique(w, x, t) == oracle::clique_by_tuples(w, t - 1, row_weight(w, {x})));
      for (int y = 0; y < w.parts(); ++y)
        for (int r = 2; r <= 4; ++r)
          CHECK(rooted_clique_minus(w, x, y, r) == oracle::clique_by_tuples(w, r - 2, row_weight(w, {x, y})));
    }
    for (int t = 1; t <= 5; ++t) {
      Rational integral(0);
      for (int x = 0; x < w.parts(); ++x) integral += rooted_clique(w, x, t) * w.measure(x);
      CHECK(integral == clique_density(w, t));
    }
  }
  // K_4 graph graphon: two remaining vertices land on the other two parts in either order
  const auto k4 = from_graph(Graph::complete(4));
  CHECK(rooted_clique_minus(k4, 0, 1, 4) == Rational(2, 16));
  CHECK_THROWS(rooted_density(k4, {RootedDensityRequest::Pattern::clique_minus, 4, {0}}));
  CHECK_THROWS(rooted_density(k4, {RootedDensityRequest::Pattern::clique, 3, {0, 1}}));
  CHECK_THROWS(rooted_clique(k4, 4, 3));
}

TEST_CASE("degree integral and neighbourhood relation") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = oracle::random_graphon(1 + trial % 6, rng);
    Rational integral(0);
    for (int x = 0; x < w.parts(); ++x) integral += degree(w, x) * w.measure(x);
    CHECK(integral == clique_density(w, 2));
    for (int x = 0; x < w.parts(); ++x) {
      const Rational d = degree(w, x);
      if (d.sign() == 0) {
        CHECK_THROWS_AS(neighbourhood(w, x), std::domain_error);
        continue;
      }
      const auto nb = neighbourhood(w, x);
      for (int r = 1; r <= 5; ++r)
        CHECK(clique_density(nb, r) == oracle::clique_by_tuples(w, r, row_weight(w, {x})) / pow(d, r));
    }
  }
  const auto k3 = neighbourhood(from_graph(Graph::complete(3)), 0);
  CHECK(k3.parts() == 2);
  CHECK(k3.measure(0) == Rational(1, 2));
  CHECK(clique_density(k3, 2) == Rational(1, 2));
  CHECK(clique_density(k3, 2) == rooted_clique(from_graph(Graph::complete(3)), 0, 3) / Rational(4, 9));
  const auto flat = neighbourhood(two_part(Rational(1, 4), Rational(1), Rational(1), Rational(1)), 1);
  CHECK(flat.measure(0) == Rational(1, 4));
}

TEST_CASE("induced graphons") {
  std::mt19937_64 rng(59);
  const auto w = oracle::random_graphon(4, rng);
  const auto all = induced(w, {0, 1, 2, 3});
  CHECK((all.measures() == w.measures()));
  CHECK((all.values() == w.values()));
  const auto one = induced(w, {2});
  CHECK(clique_density(one, 2) == w.value(2, 2));
  CHECK_THROWS(induced(w, {}));
}

TEST_CASE("extremal graphons are exact") {
  for (int r = 3; r <= 5; ++r)
    for (const Rational& alpha : grid::interior_alphas(r)) {
      const ExtremalGraphon e = construct_extremal(r, alpha);
      CHECK(e.k == k_of_alpha(alpha));
      CHECK(clique_density(e.base, 2) == Surd(alpha));
      CHECK(clique_density(e.base, r) == h_r(r, alpha));
      // clauses: scaffold parts of measure c, independent, complete to everything else
      for (int i = 0; i < e.k - 1; ++i) {
        CHECK(e.base.measure(i) == e.c);
        for (int j = 0; j < e.base.parts(); ++j) CHECK(e.base.value(i, j) == Surd(i == j ? 0 : 1));
      }
      const Surd b = Surd(1) - Surd(e.k - 1) * e.c;
      const auto block = induced(e.base, e.block_parts);
      CHECK(clique_density(block, 2) == Surd(2) * e.c * (b - e.c) / (b * b));
      CHECK(clique_density(block, 3) == Surd(0));
    }
  const auto t3 = construct_extremal(3, Rational(2, 3));
  CHECK(clique_density(t3.base, 3) == Surd(Rational(2, 9)));
  CHECK(clique_density(construct_extremal(4, Rational(1, 2)).base, 4) == Surd(0));
  CHECK(clique_density(construct_extremal(4, Rational(7, 10)).base, 4) == h_r(4, Rational(7, 10)));
  CHECK(clique_density(construct_extremal(3, Rational(1)).base, 3) == Surd(1));
}

TEST_CASE("Turan structure test") {
  int t = 0;
  CHECK(is_turan_graphon(from_graph<Surd>(Graph::turan(3, 6)), &t));
  CHECK(t == 3);
  CHECK(is_turan_graphon(construct_extremal(3, Rational(2, 3)).base));
  CHECK_FALSE(is_turan_graphon(from_graph<Surd>(Graph::turan(3, 7))));
  CHECK_FALSE(is_turan_graphon(construct_extremal(3, Rational(3, 5)).base));
}

TEST_CASE("graphon json round trip") {
  const Graphon w = construct_extremal(4, Rational(7, 10)).base;
  const Graphon back = graphon_from_json(to_json(w));
  CHECK((back.measures() == w.measures()));
  CHECK((back.values() == w.values()));
  CHECK(to_json(back).dump() == to_json(w).dump());
  CHECK_THROWS(graphon_from_json(nlohmann::json::parse(R"({"parts":[{"measure":"1/2"}],"values":[["0"]]})")));
}
