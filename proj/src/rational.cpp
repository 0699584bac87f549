#include "cliquemin/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace cliquemin {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.mpq().get_num_mpz_t(), q.mpq().get_den_mpz_t());
  return r;
}

mpz_class ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.mpq().get_num_mpz_t(), q.mpq().get_den_mpz_t());
  return r;
}

Rational pow(const Rational& q, int e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q.mpq().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.mpq().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class n = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view ds = trim(s.substr(slash + 1));
    if (!ds.empty() && ds[0] == '-') throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
    mpz_class d = parse_integer(ds, text);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(n, d);
  }
  // decimal with optional fraction and exponent
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ex = parse_integer(s.substr(e + 1), text);
    if (!ex.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    std::string_view ip = s.substr(0, dot);
    if (ip.empty() || ip == "-" || ip == "+") digits = std::string(ip) + "0";
    else digits = std::string(ip);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    digits += std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(s);
  }
  mpz_class n = parse_integer(digits, text);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(n, scale) : Rational(mpz_class(n * scale));
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  mpz_class n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class falling(long n, long j) {
  mpz_class r = 1;
  for (long i = 0; i < j; ++i) r *= (n - i);
  return r;
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (q.is_zero()) return "0";
  const bool negative = q.sign() < 0;
  const mpq_class x = abs(q).mpq();

  auto pow10 = [](long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
  };

  // 10^e <= x < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (x < pow10(e)) --e;
  while (x >= pow10(e + 1)) ++e;

  mpq_class scaled = x * pow10(digits - 1 - e);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpq_class frac = scaled - n;
  int c = cmp(frac, mpq_class(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) ++n;
  if (n == pow10(digits).get_num()) {
    n /= 10;
    ++e;
  }
  std::string s = n.get_str();

  auto strip = [](std::string t) {
    while (!t.empty() && t.back() == '0') t.pop_back();
    return t;
  };

  std::string out = negative ? "-" : "";
  if (e < -4 || e >= digits) {
    out += s.substr(0, 1);
    std::string tail = strip(s.substr(1));
    if (!tail.empty()) out += "." + tail;
    out += (e < 0 ? "e-" : "e+");
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    out += ex;
  } else if (e >= 0) {
    out += s.substr(0, static_cast<std::size_t>(e + 1));
    std::string tail = strip(s.substr(static_cast<std::size_t>(e + 1)));
    if (!tail.empty()) out += "." + tail;
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip(s);
  }
  return out;
}

mpf_class to_mpf(const Rational& q, mp_bitcnt_t bits) {
  mpf_class f(0, bits);
  mpf_set_q(f.get_mpf_t(), q.mpq().get_mpq_t());
  return f;
}

Rational from_mpf(const mpf_class& f) {
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return Rational(q);
}

}  // namespace cliquemin
