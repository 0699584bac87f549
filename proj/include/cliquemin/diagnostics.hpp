#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliquemin/quadratic.hpp"
#include "cliquemin/scallop.hpp"
#include "cliquemin/stepgraphon.hpp"

// Extremality certificates on step graphons.  For a graphon over the field S
// the parameter c lives one level up, in Quadratic<S>; every verdict below is
// an exact sign in that field.

namespace cliquemin {

/// Exact value with a decimal shadow and its sign.
struct ExactValue {
  std::string exact;
  std::string decimal;
  int sign = 0;
};

template <class T>
ExactValue describe(const T& x) {
  return {to_string(x), to_decimal(x), sign(x)};
}

inline nlohmann::json to_json(const ExactValue& v) {
  return {{"exact", v.exact}, {"decimal", v.decimal}, {"sign", v.sign}};
}

template <class S>
struct QFValue {
  Quadratic<S> q;
  Quadratic<S> f;
};

/// q_t and f_t = q_t - t_x(K_t, W) on every part, with k and c taken from the
/// graphon's own edge density.
template <class S>
std::vector<QFValue<S>> q_f_values(const StepGraphon<S>& w, int t) {
  using Q = Quadratic<S>;
  if (t < 2) throw std::domain_error("q_f_values needs t >= 2");
  const S alpha = clique_density(w, 2);
  if (sign(S(1) - alpha) <= 0) throw std::domain_error("q_f_values: edge density 1 has no k(alpha)");
  const int k = k_of_alpha(alpha);
  const Q c = c_of_alpha(alpha);
  const Q lead = Q(S(Rational(mpz_class(mpz_class(t - 1) * falling(k - 1, t - 2))))) * power(c, t - 2);
  const Q tail = Q(S(Rational(falling(k - 1, t - 1)))) * power(c, t - 1);
  const Q base = Q(S(k - 1)) * c;
  std::vector<QFValue<S>> out;
  for (int x = 0; x < w.parts(); ++x) {
    const Q q = lead * (Q(degree(w, x)) - base) + tail;
    out.push_back({q, q - Q(rooted_clique(w, x, t))});
  }
  return out;
}

template <class S>
struct NeighbourhoodRecord {
  int part = 0;
  Quadratic<S> tau;          // c / d
  Quadratic<S> rho;          // 2(k-1)tau - k(k-1)tau^2
  bool rho_bounded = true;   // rho <= 1 - 1/k
  S edge_density;            // t(K_2, N_W(x))
  S clique_density;          // t(K_{r-1}, N_W(x))
  Quadratic<S> h_lower;      // h_{r-1}(t(K_2, N_W(x))), one level up from S
  Quadratic<S> p_at_rho;     // p_{r-1,k-1}(rho); zero when k = 1
  bool lower_bound_holds = true;  // clique_density >= h_lower
  bool pattern = false;      // t(K_2,N) > rho and t(K_{r-1},N) = p(rho), with f_3 < 0 and f_r = 0
};

template <class S>
NeighbourhoodRecord<S> neighbourhood_report(const StepGraphon<S>& w, int r, int part) {
  using Q = Quadratic<S>;
  if (r < 3) throw std::domain_error("neighbourhood_report needs r >= 3");
  const S d = degree(w, part);
  if (sign(d) == 0) throw std::domain_error("neighbourhood_report: zero-degree part");
  const S alpha = clique_density(w, 2);
  if (sign(S(1) - alpha) <= 0) throw std::domain_error("neighbourhood_report: edge density 1");
  const int k = k_of_alpha(alpha);
  const Q c = c_of_alpha(alpha);

  NeighbourhoodRecord<S> rec;
  rec.part = part;
  rec.tau = c / Q(d);
  rec.rho = Q(S(2 * (k - 1))) * rec.tau - Q(S(k * (k - 1))) * rec.tau * rec.tau;
  rec.rho_bounded = sign(Q(S(Rational(k - 1, k))) - rec.rho) >= 0;

  const StepGraphon<S> nb = neighbourhood(w, part);
  rec.edge_density = clique_density(nb, 2);
  rec.clique_density = clique_density(nb, r - 1);
  rec.h_lower = h_r(r - 1, rec.edge_density);
  rec.lower_bound_holds = sign(Q(rec.clique_density) - rec.h_lower) >= 0;

  // gamma_{k-1}(rho) = 1/k + |k tau - 1|/k since the radicand is ((k-1)(k tau - 1))^2
  if (k >= 2) {
    const Q gamma = Q(S(Rational(1, k))) + abs(Q(S(k)) * rec.tau - Q(S(1))) / Q(S(k));
    rec.p_at_rho = kappa(r - 1, k - 1, gamma);
  } else {
    rec.p_at_rho = Q(S(0));
  }

  const auto f3 = q_f_values(w, 3)[static_cast<std::size_t>(part)].f;
  const auto fr = q_f_values(w, r)[static_cast<std::size_t>(part)].f;
  rec.pattern = sign(f3) < 0 && sign(fr) == 0 && sign(Q(rec.edge_density) - rec.rho) > 0 &&
                sign(Q(rec.clique_density) - rec.p_at_rho) == 0;
  return rec;
}

struct Violation {
  std::string condition;  // f_r_nonzero | heavy_pair | degree_cap | neighbourhood
  std::vector<int> parts;
  ExactValue margin;      // strictly positive amount by which the condition fails
};

struct PartRecord {
  int part = 0;
  ExactValue measure, degree, f_r, f_3, degree_excess;
};

struct PairRecord {
  int x = 0, y = 0;
  ExactValue excess;  // t_{x,y}(K_r^-) - (k-1)^(r-2) c^(r-2)
};

struct NeighbourhoodSummary {
  int part = 0;
  ExactValue tau, rho, edge_density, clique_density, h_lower, p_at_rho;
  bool rho_bounded = true;
  bool lower_bound_holds = true;
  bool pattern = false;
  bool required = false;  // f_3 < 0 and d > 0, so the lower bound is part of the verdict
};

/// Necessary conditions for t(K_r, W) = h_r(t(K_2, W)) on a step graphon.
/// Passing does not prove extremality.
struct Certificate {
  int r = 3;
  ExactValue alpha;
  int k = 0;
  ExactValue c;
  ExactValue clique_gap;  // t(K_r, W) - h_r(alpha)
  std::vector<PartRecord> per_part;
  std::vector<PairRecord> heavy_pairs;
  std::vector<NeighbourhoodSummary> neighbourhood_checks;
  std::vector<Violation> violations;
  bool pass = true;
};

nlohmann::json to_json(const Certificate& cert);

template <class S>
Certificate certify(const StepGraphon<S>& w, int r) {
  using Q = Quadratic<S>;
  if (r < 3) throw std::domain_error("certify needs r >= 3");
  const S alpha = clique_density(w, 2);
  if (sign(S(1) - alpha) <= 0) throw std::domain_error("certify: edge density 1 is outside every scallop");
  if (is_cusp(alpha)) throw std::domain_error("certify: edge density is a cusp 1 - 1/k; use the Turan structure test");

  Certificate cert;
  cert.r = r;
  cert.k = k_of_alpha(alpha);
  const int k = cert.k;
  const Q c = c_of_alpha(alpha);
  cert.alpha = describe(alpha);
  cert.c = describe(c);
  cert.clique_gap = describe(Q(clique_density(w, r)) - h_r(r, alpha));

  const auto fr = q_f_values(w, r);
  const auto f3 = q_f_values(w, 3);
  const Q cap = Q(S(k)) * c;
  for (int x = 0; x < w.parts(); ++x) {
    const S d = degree(w, x);
    const Q excess = Q(d) - cap;
    const auto& f = fr[static_cast<std::size_t>(x)].f;
    cert.per_part.push_back({x, describe(w.measure(x)), describe(d), describe(f),
                             describe(f3[static_cast<std::size_t>(x)].f), describe(excess)});
    if (sign(f) != 0) cert.violations.push_back({"f_r_nonzero", {x}, describe(abs(f))});
    if (sign(excess) > 0) cert.violations.push_back({"degree_cap", {x}, describe(excess)});
  }

  const Q threshold = Q(S(Rational(falling(k - 1, r - 2)))) * power(c, r - 2);
  for (int x = 0; x < w.parts(); ++x)
    for (int y = x; y < w.parts(); ++y) {
      if (sign(w.value(x, y)) == 0) continue;
      const Q excess = Q(rooted_clique_minus(w, x, y, r)) - threshold;
      if (sign(excess) > 0) {
        cert.heavy_pairs.push_back({x, y, describe(excess)});
        cert.violations.push_back({"heavy_pair", {x, y}, describe(excess)});
      }
    }

  for (int x = 0; x < w.parts(); ++x) {
    if (sign(degree(w, x)) == 0) continue;
    const auto rec = neighbourhood_report(w, r, x);
    NeighbourhoodSummary s;
    s.part = x;
    s.tau = describe(rec.tau);
    s.rho = describe(rec.rho);
    s.edge_density = describe(rec.edge_density);
    s.clique_density = describe(rec.clique_density);
    s.h_lower = describe(rec.h_lower);
    s.p_at_rho = describe(rec.p_at_rho);
    s.rho_bounded = rec.rho_bounded;
    s.lower_bound_holds = rec.lower_bound_holds;
    s.pattern = rec.pattern;
    s.required = sign(f3[static_cast<std::size_t>(x)].f) < 0;
    if (s.required && !s.lower_bound_holds)
      cert.violations.push_back({"neighbourhood", {x}, describe(rec.h_lower - Q(rec.clique_density))});
    cert.neighbourhood_checks.push_back(std::move(s));
  }
  cert.pass = cert.violations.empty();
  return cert;
}

}  // namespace cliquemin
