#include "doctest.h"

#include <cmath>
#include <vector>

#include "cliquemin/scallop.hpp"

using namespace cliquemin;

namespace {

// K_ell density of the complete partite graphon with the given part measures:
// ell! times the elementary symmetric polynomial e_ell of the measures.
double partite_clique_density(const std::vector<double>& parts, int ell) {
  std::vector<double> e(static_cast<std::size_t>(ell) + 1, 0.0);
  e[0] = 1;
  for (double x : parts)
    for (int j = ell; j >= 1; --j) e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
  double f = 1;
  for (int j = 2; j <= ell; ++j) f *= j;
  return f * e[static_cast<std::size_t>(ell)];
}

// c(alpha) by bisection on the edge density of k parts of c plus one of 1 - kc.
double c_by_bisection(double alpha, int k) {
  double lo = 1.0 / (k + 1), hi = 1.0 / k;
  auto density = [k](double c) { return 1 - k * c * c - (1 - k * c) * (1 - k * c); };
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    // density is decreasing in c on [1/(k+1), 1/k]
    if (density(mid) > alpha) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

double h_oracle(int r, double alpha, int k) {
  double c = c_by_bisection(alpha, k);
  std::vector<double> parts(static_cast<std::size_t>(k), c);
  parts.push_back(1 - k * c);
  return partite_clique_density(parts, r);
}

mpf_class hi(const Surd& s) { return to_mpf(s, 256); }

}  // namespace

TEST_CASE("kappa examples and binomial form") {
  CHECK(kappa(2, 2, Rational(1, 2)) == Rational(1, 2));
  CHECK(kappa(3, 3, Rational(1, 3)) == Rational(2, 9));
  CHECK(kappa(4, 3, Rational(1, 3)) == Rational(0));
  // 2/9 is the direct triple sum over three parts of 1/3
  CHECK(std::abs(partite_clique_density({1.0 / 3, 1.0 / 3, 1.0 / 3}, 3) - 2.0 / 9) < 1e-15);

  for (int ell = 2; ell <= 6; ++ell)
    for (int t = 1; t <= 7; ++t)
      for (int j = 0; j <= 12; ++j) {
        Rational g(j, 12 * t);
        Rational binom_form = Rational(factorial(ell)) *
                              (Rational(binomial(t, ell)) * pow(g, ell) +
                               Rational(binomial(t, ell - 1)) * pow(g, ell - 1) * (Rational(1) - Rational(t) * g));
        CHECK(kappa(ell, t, g) == binom_form);
      }
}

TEST_CASE("gamma_t") {
  for (int k = 1; k <= 8; ++k) CHECK(gamma_t(k, Rational(k - 1, k)) == Surd(Rational(1, k)));
  CHECK(gamma_t(2, Rational(1, 2)) == Surd(Rational(1, 2)));
  Surd g = gamma_t(3, Rational(7, 10));
  Surd shifted = (g - Surd(Rational(1, 4))) * Surd(Rational(12));
  CHECK(shifted * shifted == Surd(Rational(3, 5)));
  CHECK(kappa(2, 3, g) == Surd(Rational(7, 10)));
  CHECK_THROWS_AS(gamma_t(3, Rational(4, 5)), std::domain_error);
}

TEST_CASE("round trip kappa(2, t, gamma_t(t, x)) = x on the 1/120 grid") {
  for (int t = 1; t <= 8; ++t)
    for (int j = 0; j <= 120; ++j) {
      Rational x(j, 120);
      if (x > Rational(t, t + 1)) break;
      CHECK(kappa(2, t, gamma_t(t, x)) == Surd(x));
    }
}

TEST_CASE("p_rt examples") {
  CHECK(p_rt(3, 3, Rational(2, 3)) == Surd(Rational(2, 9)));
  CHECK(p_rt(3, 2, Rational(1, 2)) == Surd(0));
  for (int r = 3; r <= 6; ++r)
    for (int j = 0; j <= 10; ++j) {
      Rational x = Rational(j, 10) * Rational(r - 2, r - 1);
      CHECK(p_rt(r, r - 2, x) == Surd(0));
    }
}

TEST_CASE("expanded radical form of p_rt") {
  // t^(r-1) / (t^r (t+1)^(r-1)) (t + s)^(r-1) (t - (r-1) s), s = sqrt(t(t - (t+1)x))
  for (int r = 3; r <= 5; ++r)
    for (int t = 1; t <= 5; ++t)
      for (int j = 0; j <= 6; ++j) {
        Rational x = Rational(j, 6) * Rational(t, t + 1);
        Surd s(Rational(0), Rational(1), Rational(t) * (Rational(t) - Rational(t + 1) * x));
        Surd lead(Rational(falling(t, r - 1)) / (pow(Rational(t), r) * pow(Rational(t + 1), r - 1)));
        Surd expanded = lead * power(Surd(Rational(t)) + s, r - 1) * (Surd(Rational(t)) - Surd(Rational(r - 1)) * s);
        CHECK(p_rt(r, t, x) == expanded);
      }
}

TEST_CASE("k_of_alpha") {
  CHECK(k_of_alpha(Rational(0)) == 1);
  CHECK(k_of_alpha(Rational(1, 2)) == 2);
  CHECK(k_of_alpha(Rational(7, 10)) == 3);
  CHECK(k_of_alpha(Rational(2, 3)) == 3);
  CHECK(k_of_alpha(Rational(3, 4) - Rational(1, 1000000)) == 3);
  CHECK_THROWS_AS(k_of_alpha(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(k_of_alpha(Rational(-1, 5)), std::domain_error);
  // surd argument: 2/3 + 1/100 sqrt(2) ~ 0.6808 lies in I_3
  Surd a = Surd(Rational(2, 3)) + Surd(Rational(0), Rational(1, 100), Rational(2));
  CHECK(k_of_alpha(a) == 3);
  CHECK(k_of_alpha(Surd(Rational(2, 3))) == 3);
}

TEST_CASE("h_r examples and brute-force oracle") {
  CHECK(h_r(3, Rational(2, 3)) == Surd(Rational(2, 9)));
  CHECK(h_r(3, Rational(3, 4)) == Surd(Rational(3, 8)));
  CHECK(h_r(4, Rational(2, 3)) == Surd(0));
  CHECK(h_r(5, Rational(1)) == Surd(1));
  CHECK(h_r(2, Rational(7, 10)) == Surd(Rational(7, 10)));
  for (int r = 3; r <= 6; ++r)
    for (int j = 0; j < 120; ++j) {
      Rational alpha(j, 120);
      Surd h = h_r(r, alpha);
      const bool zero_zone = alpha <= Rational(r - 2, r - 1);
      CHECK((sign(h) == 0) == zero_zone);
      CHECK(sign(h) >= 0);
      const int k = k_of_alpha(alpha);
      CHECK(std::abs(to_double(h) - h_oracle(r, alpha.to_double(), k)) < 1e-12);
    }
}

TEST_CASE("scallop parameters: bound, monotonicity, continuity") {
  Surd previous_c;
  bool first = true;
  for (int j = 0; j < 120; ++j) {
    Rational alpha(j, 120);
    const int k = k_of_alpha(alpha);
    Surd c = c_of_alpha(alpha);
    CHECK(compare(c, Surd(Rational(1, k + 1))) > 0);
    CHECK(compare(c, Surd(Rational(1, k))) <= 0);
    if (!first) CHECK(compare(c, previous_c) < 0);
    previous_c = c;
    first = false;
  }
  for (int r = 3; r <= 6; ++r)
    for (int t = 1; t <= 8; ++t) {
      Rational x0(t, t + 1);
      CHECK(p_rt(r, t, x0) == p_rt(r, t + 1, x0));
    }
}

TEST_CASE("h_r is the maximum of the p_{r,t} defined at alpha") {
  for (int r = 3; r <= 5; ++r)
    for (int j = 0; j < 120; j += 3) {
      Rational alpha(j, 120);
      const int k = k_of_alpha(alpha);
      Surd h = h_r(r, alpha);
      for (int t = k; t <= k + 5; ++t) CHECK(compare(h, p_rt(r, t, alpha)) >= 0);
      CHECK(compare(h, p_rt(r, k, alpha)) == 0);
    }
}

TEST_CASE("one-sided derivatives") {
  CHECK(h_r_prime(3, Rational(1, 2), Side::right) == Surd(Rational(3, 2)));
  CHECK(h_r_prime(3, Rational(1, 2), Side::left) == Surd(0));
  CHECK(!(h_r_prime(3, Rational(2, 3), Side::left) == h_r_prime(3, Rational(2, 3), Side::right)));
  CHECK(h_r_prime(4, Rational(3, 5), Side::right) == Surd(0));
  CHECK_THROWS_AS(h_r_prime(3, Rational(0), Side::right), std::domain_error);
  CHECK_THROWS_AS(h_r_prime(3, Rational(1), Side::right), std::domain_error);
  // interior: sides agree
  CHECK(h_r_prime(4, Rational(7, 10), Side::left) == h_r_prime(4, Rational(7, 10), Side::right));
}

TEST_CASE("derivative matches central finite differences") {
  const Rational eps(1, 1000000);
  for (int r = 3; r <= 5; ++r)
    for (int j = 1; j < 60; ++j) {
      Rational alpha(2 * j + 1, 120);  // odd numerators avoid cusps with denominators | 120
      if (is_cusp(alpha)) continue;
      mpf_class fd = (hi(h_r(r, alpha + eps)) - hi(h_r(r, alpha - eps))) / (2 * to_mpf(eps, 256));
      mpf_class exact = hi(h_r_prime(r, alpha, Side::right));
      mpf_class err = abs(fd - exact);
      CHECK(err.get_d() <= 1e-4 * std::max(1.0, std::abs(exact.get_d())));
    }
}

TEST_CASE("second derivative: finite differences and concavity") {
  Surd v = p_rt_second(3, 2, Rational(1, 2));
  CHECK(v == Surd(Rational(-3, 2)));
  const Rational eps(1, 10000);
  auto p = [](const Rational& x) { return hi(p_rt(3, 2, x)); };
  Rational x(1, 2);
  mpf_class fd2 = (p(x + eps) - 2 * p(x) + p(x - eps)) / (to_mpf(eps, 256) * to_mpf(eps, 256));
  CHECK(std::abs((fd2.get_d() - to_double(v)) / to_double(v)) < 1e-4);
  CHECK(sign(p_rt_second(4, 3, Rational(2, 3))) < 0);
  CHECK_THROWS_AS(p_rt_second(3, 2, Rational(2, 3)), std::domain_error);
  for (int r = 3; r <= 5; ++r)
    for (int t = r - 1; t <= r + 2; ++t)
      for (int j = 0; j < 10; ++j) {
        Rational xx = Rational(j, 10) * Rational(t, t + 1);
        CHECK(sign(p_rt_second(r, t, xx)) < 0);
      }
}

TEST_CASE("taylor bound") {
  CHECK(taylor_bound_check(3, Rational(7, 12), Rational(7, 12)));
  CHECK(taylor_bound_check(3, Rational(7, 12), Rational(7, 12) + Rational(1, 1000)));
  CHECK(taylor_bound_check(4, Rational(17, 24), Rational(17, 24) - Rational(1, 500)));
  CHECK_THROWS_AS(taylor_bound_check(3, Rational(65, 100), Rational(67, 100)), std::domain_error);
  CHECK_THROWS_AS(taylor_bound_check(3, Rational(1, 2), Rational(51, 100)), std::domain_error);
  // a displacement large relative to the curvature breaks the bound: h_3'' = -3 near 7/12
  // would need |d|^{1/2} > 2/3; not reachable inside I_2, so every in-scallop point passes
  CHECK(taylor_bound_check(3, Rational(7, 12), Rational(1, 2)));
}

TEST_CASE("linear extension") {
  CHECK(linear_extension_check(3, 3, Rational(1, 2)));
  CHECK(sign(p_rt(3, 3, Rational(1, 2))) <= 0);
  CHECK(linear_extension_check(4, 5, Rational(2, 3)));
  for (int j = 0; j < 120; ++j) {
    Rational alpha(j, 120);
    CHECK(linear_extension_check(4, k_of_alpha(alpha), alpha));
    CHECK(compare(h_r(4, alpha), p_rt(4, k_of_alpha(alpha), alpha)) == 0);
  }
  CHECK_THROWS_AS(linear_extension_check(3, 2, Rational(7, 10)), std::domain_error);
}

TEST_CASE("scallop point invariants") {
  for (int j = 0; j < 120; j += 7) {
    ScallopPoint pt = scallop_point(Rational(j, 120), 6);
    CHECK(pt.h.at(2) == Surd(pt.alpha));
    for (int r = 3; r <= 6; ++r)
      if (pt.k <= r - 2) CHECK(pt.h.at(r) == Surd(0));
  }
  ScallopPoint pt = scallop_point(Rational(2, 3), 3);
  CHECK(pt.k == 3);
  CHECK(pt.c == Surd(Rational(1, 3)));
  CHECK(pt.h.at(3) == Surd(Rational(2, 9)));
}
