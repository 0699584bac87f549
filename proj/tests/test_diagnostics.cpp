#include "doctest.h"

#include <random>

#include "cliquemin/diagnostics.hpp"
#include "alpha_grid.hpp"
#include "oracles.hpp"

using namespace cliquemin;

namespace {

bool has_violation(const Certificate& c, const std::string& condition) {
  for (const auto& v : c.violations)
    if (v.condition == condition) return true;
  return false;
}

// Integrated f_t against h_t - t(K_t, W), with the right side from the scallop
// formula and direct tuple summation.
template <class S>
void check_integral_identity(const StepGraphon<S>& w, int t) {
  using Q = Quadratic<S>;
  const auto values = q_f_values(w, t);
  Q lhs(S(0));
  for (int x = 0; x < w.parts(); ++x) lhs += values[static_cast<std::size_t>(x)].f * Q(w.measure(x));
  const S alpha = oracle::clique_by_tuples(w, 2);
  CHECK(lhs == h_r(t, alpha) - Q(oracle::clique_by_tuples(w, t)));
}

}  // namespace

TEST_CASE("integral identity on random rational graphons") {
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 60) {
    const auto w = oracle::random_graphon(1 + tested % 6, rng);
    if (clique_density(w, 2) == Rational(1)) continue;
    for (int t = 2; t <= 5; ++t) check_integral_identity(w, t);
    ++tested;
  }
  check_integral_identity(constant_graphon(Rational(99, 100)), 3);
  check_integral_identity(constant_graphon(Rational(99, 100)), 4);
  CHECK_THROWS_AS(q_f_values(constant_graphon(Rational(1)), 3), std::domain_error);
}

TEST_CASE("integral identity on extremal graphons") {
  for (int r = 3; r <= 5; ++r)
    for (const Rational& alpha : grid::interior_alphas(r)) {
      const Graphon w = construct_extremal(r, alpha).base;
      check_integral_identity(w, 3);
      check_integral_identity(w, r);
    }
}

TEST_CASE("rho formula against f_3") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto w = oracle::random_graphon(1 + trial % 5, rng);
    if (clique_density(w, 2) == Rational(1)) continue;
    const auto f3 = q_f_values(w, 3);
    for (int x = 0; x < w.parts(); ++x) {
      if (degree(w, x).sign() == 0) continue;
      const auto rec = neighbourhood_report(w, 3, x);
      const bool above = sign(Quadratic<Rational>(rec.edge_density) - rec.rho) > 0;
      CHECK(above == (sign(f3[static_cast<std::size_t>(x)].f) < 0));
      CHECK(rec.rho_bounded);
    }
  }
}

TEST_CASE("certificates pass on extremal graphons") {
  for (int r = 3; r <= 5; ++r)
    for (const Rational& alpha : grid::interior_alphas(r)) {
      const ExtremalGraphon e = construct_extremal(r, alpha);
      const Certificate cert = certify(e.base, r);
      CHECK_MESSAGE(cert.pass, "r=", r, " alpha=", alpha.to_string());
      CHECK(cert.clique_gap.sign == 0);
      CHECK(cert.heavy_pairs.empty());
      for (const auto& p : cert.per_part) {
        CHECK(p.f_r.sign == 0);
        CHECK(p.degree_excess.sign <= 0);
      }
      for (int x = 0; x < e.k - 1; ++x) {
        const auto rec = neighbourhood_report(e.base, r, x);
        CHECK(sign(rec.tau - Quadratic<Surd>(Surd(Rational(1, e.k)))) >= 0);
      }
      for (const auto& n : cert.neighbourhood_checks) {
        CHECK(n.rho_bounded);
        CHECK_FALSE(n.pattern);
      }
    }
}

TEST_CASE("certificates fail on perturbed and quasirandom graphons") {
  for (int r = 3; r <= 5; ++r)
    for (const Rational& alpha : grid::interior_alphas(r)) {
      const ExtremalGraphon e = construct_extremal(r, alpha);
      const Graphon moved = transfer_measure(e.base, 0, 1, Surd(Rational(1, 100)));
      const Certificate cert = certify(moved, r);
      CHECK_FALSE(cert.pass);
      REQUIRE_FALSE(cert.violations.empty());
      for (const auto& v : cert.violations) CHECK(v.margin.sign > 0);
    }
  for (const Rational& a : {Rational(3, 5), Rational(7, 10)}) {
    const Certificate cert = certify(constant_graphon(a), 4);
    CHECK_FALSE(cert.pass);
    CHECK(cert.clique_gap.sign > 0);
    CHECK(has_violation(cert, "f_r_nonzero"));
  }
}

TEST_CASE("certificate input checks and json") {
  CHECK_THROWS_AS(certify(constant_graphon(Rational(1)), 3), std::domain_error);
  CHECK_THROWS_AS(certify(from_graph(Graph::turan(2, 2)), 3), std::domain_error);
  CHECK_THROWS_AS(certify(constant_graphon(Rational(1, 2)), 2), std::domain_error);
  const auto json = to_json(certify(construct_extremal(4, Rational(7, 10)).base, 4));
  CHECK(json["verdict"] == "pass");
  CHECK(json["k"] == 3);
  const auto bad = to_json(certify(constant_graphon(Rational(7, 10)), 4));
  CHECK(bad["verdict"] == "fail");
  CHECK(bad["violations"].size() > 0);
}
