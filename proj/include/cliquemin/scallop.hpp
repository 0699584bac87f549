#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "cliquemin/quadratic.hpp"
#include "cliquemin/rational.hpp"

// Closed forms for the extremal clique-density curve h_r and its pieces.
//
// Every function is a template over the field F holding the edge density:
// Rational for ordinary use, Surd when the density itself is irrational
// (neighbourhoods of step graphons with surd measures). Square roots move
// the result one level up the tower, into Quadratic<F>.

namespace cliquemin {

enum class Side { left, right };

namespace detail {

inline Rational integer(const mpz_class& z) { return Rational(z); }

template <class F>
void require_density(const F& alpha) {
  if (sign(alpha) < 0 || sign(F(1) - alpha) < 0)
    throw std::domain_error("edge density must lie in [0,1]");
}

}  // namespace detail

/// t^(ell-1) gamma^(ell-1) (ell - (ell-1)(t+1) gamma): the K_ell density of a
/// complete partite graphon with t parts of measure gamma and one of 1 - t gamma.
template <class F>
F kappa(int ell, int t, const F& gamma) {
  if (ell < 2 || t < 1) throw std::domain_error("kappa needs ell >= 2 and t >= 1");
  F head = F(detail::integer(falling(t, ell - 1))) * power(gamma, ell - 1);
  return head * (F(ell) - F((ell - 1) * (t + 1)) * gamma);
}

/// Larger root gamma of kappa(2, t, gamma) = x, defined for x <= 1 - 1/(t+1).
template <class F>
Quadratic<F> gamma_t(int t, const F& x) {
  if (t < 1) throw std::domain_error("gamma_t needs t >= 1");
  if (sign(F(Rational(t, t + 1)) - x) < 0)
    throw std::domain_error("gamma_t: x exceeds 1 - 1/(t+1)");
  F radicand = F(t) * (F(t) - F(t + 1) * x);
  return Quadratic<F>(F(Rational(1, t + 1)), F(Rational(1, static_cast<long>(t) * (t + 1))), radicand);
}

template <class F>
Quadratic<F> p_rt(int r, int t, const F& x) {
  return kappa(r, t, gamma_t(t, x));
}

/// The k with 1 - 1/k <= alpha < 1 - 1/(k+1).
template <class F>
int k_of_alpha(const F& alpha) {
  if (sign(alpha) < 0 || sign(F(1) - alpha) <= 0)
    throw std::domain_error("k(alpha) needs 0 <= alpha < 1");
  if constexpr (std::same_as<F, Rational>) {
    mpz_class k = floor(Rational(1) / (Rational(1) - alpha));
    if (!k.fits_sint_p()) throw std::domain_error("k(alpha) out of range");
    return static_cast<int>(k.get_si());
  } else {
    const double approx = 1.0 / (1.0 - to_double(alpha));
    int k = std::max(1, static_cast<int>(std::floor(approx)));
    while (k > 1 && sign(alpha - F(Rational(k - 1, k))) < 0) --k;
    while (sign(F(Rational(k, k + 1)) - alpha) <= 0) ++k;
    return k;
  }
}

template <class F>
bool is_cusp(const F& alpha) {
  const int k = k_of_alpha(alpha);
  return sign(alpha - F(Rational(k - 1, k))) == 0;
}

/// c(alpha) = gamma_k(alpha) with k = k(alpha).
template <class F>
Quadratic<F> c_of_alpha(const F& alpha) {
  return gamma_t(k_of_alpha(alpha), alpha);
}

/// Minimum asymptotic K_r density at edge density alpha.
template <class F>
Quadratic<F> h_r(int r, const F& alpha) {
  if (r < 2) throw std::domain_error("h_r needs r >= 2");
  detail::require_density(alpha);
  if (sign(F(1) - alpha) == 0) return Quadratic<F>(F(1));
  return p_rt(r, k_of_alpha(alpha), alpha);
}

template <class F>
Quadratic<F> p_rt_prime(int r, int t, const F& x) {
  Quadratic<F> g = gamma_t(t, x);
  Rational coeff = detail::integer(binomial(r, 2) * falling(t - 1, r - 2));
  return Quadratic<F>(F(coeff)) * power(g, r - 2);
}

/// One-sided derivative of h_r. The sides differ only at cusps 1 - 1/k.
template <class F>
Quadratic<F> h_r_prime(int r, const F& alpha, Side side) {
  if (r < 2) throw std::domain_error("h_r_prime needs r >= 2");
  if (sign(alpha) <= 0 || sign(F(1) - alpha) <= 0)
    throw std::domain_error("h_r_prime needs 0 < alpha < 1");
  int t = k_of_alpha(alpha);
  if (side == Side::left && sign(alpha - F(Rational(t - 1, t))) == 0) --t;
  return p_rt_prime(r, t, alpha);
}

template <class F>
Quadratic<F> p_rt_second(int r, int t, const F& x) {
  if (r < 3) throw std::domain_error("p_rt_second needs r >= 3");
  Quadratic<F> g = gamma_t(t, x);
  Quadratic<F> den = Quadratic<F>(F(2 * t)) * (Quadratic<F>(F(1)) - Quadratic<F>(F(t + 1)) * g);
  if (sign(den) == 0) throw std::domain_error("p_rt_second undefined at x = 1 - 1/(t+1)");
  Rational coeff = detail::integer(3 * binomial(r, 3) * falling(t - 1, r - 2));
  return Quadratic<F>(F(coeff)) * power(g, r - 3) / den;
}

/// |h_r(a') - h_r(a) - h_r'(a)(a' - a)| <= |a' - a|^{3/2}, decided exactly.
/// Both points must lie in the same interval I_k with alpha interior.
bool taylor_bound_check(int r, const Rational& alpha, const Rational& alpha_prime);

/// h_r(alpha) >= p_{r,t}(alpha) for alpha < 1 - 1/t, decided exactly.
bool linear_extension_check(int r, int t, const Rational& alpha);

struct ScallopPoint {
  Rational alpha;
  int k = 0;
  Surd c;
  std::map<int, Surd> h;              // r >= 2
  std::map<int, Surd> h_prime;        // right derivative, r >= 3; empty at alpha = 0
  std::map<int, Surd> h_prime_left;   // differs from h_prime only at cusps
};

ScallopPoint scallop_point(const Rational& alpha, int max_r);

}  // namespace cliquemin
