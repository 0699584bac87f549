#include "cliquemin/scallop.hpp"

namespace cliquemin {

namespace {

using Tower = Quadratic<Surd>;

// x - y as an element of Q(sqrt(dx))(sqrt(dy)).
Tower lifted_difference(const Surd& x, const Surd& y) {
  if (compatible(x, y)) return Tower(Surd(x - y));
  return Tower(Surd(x - Surd(y.a())), Surd(-y.b()), Surd(y.radicand()));
}

}  // namespace

bool taylor_bound_check(int r, const Rational& alpha, const Rational& alpha_prime) {
  const int k = k_of_alpha(alpha);
  if (k_of_alpha(alpha_prime) != k)
    throw std::domain_error("taylor_bound_check: points lie in different scallops");
  if (alpha == Rational(k - 1, k))
    throw std::domain_error("taylor_bound_check: alpha must be interior to its scallop");
  const Rational delta = alpha_prime - alpha;
  if (delta.is_zero()) return true;

  const Surd c = gamma_t(k, alpha);
  const Rational slope_coeff(mpz_class(binomial(r, 2) * falling(k - 1, r - 2)));
  const Surd linear = h_r(r, alpha) + Surd(slope_coeff) * power(c, r - 2) * Surd(delta);
  const Tower z = lifted_difference(h_r(r, alpha_prime), linear);
  const Rational bound = pow(abs(delta), 3);  // compare squares: z^2 <= |delta|^3
  return sign(Tower(Surd(bound)) - z * z) >= 0;
}

bool linear_extension_check(int r, int t, const Rational& alpha) {
  if (t < 1) throw std::domain_error("linear_extension_check needs t >= 1");
  if (alpha.sign() < 0 || alpha > Rational(t, t + 1))
    throw std::domain_error("linear_extension_check: alpha outside the domain of p_{r,t}");
  return compare(h_r(r, alpha), p_rt(r, t, alpha)) >= 0;
}

ScallopPoint scallop_point(const Rational& alpha, int max_r) {
  if (max_r < 2) throw std::domain_error("scallop_point needs max_r >= 2");
  ScallopPoint pt;
  pt.alpha = alpha;
  pt.k = k_of_alpha(alpha);
  pt.c = gamma_t(pt.k, alpha);
  for (int r = 2; r <= max_r; ++r) {
    pt.h[r] = h_r(r, alpha);
    if (r >= 3 && alpha.sign() > 0) {
      pt.h_prime[r] = h_r_prime(r, alpha, Side::right);
      pt.h_prime_left[r] = h_r_prime(r, alpha, Side::left);
    }
  }
  return pt;
}

}  // namespace cliquemin
