#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace cliquemin {

/// Exact rational number in canonical form (coprime, positive denominator).
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}

  template <std::unsigned_integral I>
  Rational(I v) : v_(mpz_class(static_cast<unsigned long>(v))) {}

  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(mpq_class v);

  const mpq_class& mpq() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  /// "p/q", or "p" for integers.
  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline int sign(const Rational& q) { return q.sign(); }
inline double to_double(const Rational& q) { return q.to_double(); }
inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

mpz_class floor(const Rational& q);
mpz_class ceil(const Rational& q);
Rational pow(const Rational& q, int e);

/// Parses "p/q", "p" or a finite decimal such as "0.75" / "-1.5e-3".
Rational parse_rational(std::string_view text);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

/// C(n, k) and the falling power n(n-1)...(n-j+1) as exact integers.
mpz_class binomial(long n, long k);
mpz_class falling(long n, long j);
mpz_class factorial(long n);

/// Decimal rendering with `digits` significant digits, round-half-even,
/// printf("%g")-style choice between fixed and scientific notation.
std::string to_decimal(const Rational& q, int digits = 12);

/// High precision binary float view of q.
mpf_class to_mpf(const Rational& q, mp_bitcnt_t bits);
/// Exact rational value of a binary float.
Rational from_mpf(const mpf_class& f);

}  // namespace cliquemin

namespace Eigen {

template <>
struct NumTraits<cliquemin::Rational> : GenericNumTraits<cliquemin::Rational> {
  using Real = cliquemin::Rational;
  using NonInteger = cliquemin::Rational;
  using Nested = cliquemin::Rational;
  using Literal = cliquemin::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
