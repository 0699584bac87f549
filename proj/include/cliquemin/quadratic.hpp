#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "cliquemin/rational.hpp"

namespace cliquemin {

/// Element a + b*sqrt(d) of a quadratic extension of an ordered field Base,
/// with a, b, d in Base and d >= 0.
///
/// Base is Rational for ordinary surds, or itself a Quadratic for the
/// two-level towers that appear when a density is already irrational. Sign
/// determination is exact at every level: it recurses on Base and resolves
/// mixed-sign cases by comparing a^2 against b^2 d.
///
/// Binary arithmetic needs a common radicand. Elements with b = 0 adapt to
/// the other operand; two genuinely different radicands throw
/// std::domain_error (for Rational base, radicands differing by a rational
/// square factor are reconciled first).
template <class Base>
class Quadratic {
 public:
  using base_type = Base;

  Quadratic() = default;

  template <class T>
    requires(!std::same_as<std::remove_cvref_t<T>, Quadratic> && std::constructible_from<Base, const T&>)
  Quadratic(const T& a) : a_(a) {}

  Quadratic(Base a, Base b, Base d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (sign(d_) < 0) throw std::domain_error("negative radicand");
    normalize_radicand();
    drop_if_base();
  }

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }
  const Base& radicand() const { return d_; }

  /// True when the stored representation has no irrational part.
  bool in_base() const { return sign(b_) == 0; }

  /// Representation equality (same a, b and radicand), not value equality.
  bool identical(const Quadratic& o) const {
    return same(a_, o.a_) && same(b_, o.b_) && same(d_, o.d_);
  }

  Quadratic conjugate() const { return raw(a_, -b_, d_); }

  Quadratic operator-() const { return raw(-a_, -b_, d_); }

  Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
  Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
  Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
  Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

  friend Quadratic operator+(Quadratic x, Quadratic y) {
    unify(x, y);
    return raw(x.a_ + y.a_, x.b_ + y.b_, x.d_);
  }

  friend Quadratic operator-(Quadratic x, Quadratic y) {
    unify(x, y);
    return raw(x.a_ - y.a_, x.b_ - y.b_, x.d_);
  }

  friend Quadratic operator*(Quadratic x, Quadratic y) {
    if (y.in_base()) return raw(x.a_ * y.a_, x.b_ * y.a_, x.d_);
    if (x.in_base()) return raw(x.a_ * y.a_, x.a_ * y.b_, y.d_);
    unify(x, y);
    return raw(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
  }

  friend Quadratic operator/(Quadratic x, Quadratic y) {
    if (!y.in_base()) {
      Base norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
      if (sign(norm) != 0) {
        Quadratic num = x * y.conjugate();
        return raw(num.a_ / norm, num.b_ / norm, num.d_);
      }
      // a^2 = b^2 d: sqrt(d) = |a/b| lies in Base, so y collapses.
      Base root = y.a_ / y.b_;
      if (sign(root) < 0) root = -root;
      y = Quadratic(Base(y.a_ + y.b_ * root));
    }
    if (sign(y.a_) == 0) throw std::domain_error("division by zero");
    return raw(x.a_ / y.a_, x.b_ / y.a_, x.d_);
  }

  /// Exact sign of the represented real number.
  friend int sign(const Quadratic& q) {
    int sa = sign(q.a_);
    int sb = sign(q.d_) == 0 ? 0 : sign(q.b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    int s = sign(Base(q.a_ * q.a_ - q.b_ * q.b_ * q.d_));
    return s > 0 ? sa : (s < 0 ? sb : 0);
  }

  /// Value equality; requires compatible radicands.
  friend bool operator==(const Quadratic& x, const Quadratic& y) { return sign(x - y) == 0; }

 private:
  Base a_{};
  Base b_{};
  Base d_{};

  static bool same(const Base& x, const Base& y) {
    if constexpr (std::same_as<Base, Rational>) return x == y;
    else return x.identical(y);
  }

  static Quadratic raw(Base a, Base b, Base d) {
    Quadratic q;
    q.a_ = std::move(a);
    q.b_ = std::move(b);
    q.d_ = std::move(d);
    q.drop_if_base();
    return q;
  }

  void drop_if_base() {
    if (sign(b_) == 0 || sign(d_) == 0) {
      b_ = Base{};
      d_ = Base{};
    }
  }

  void normalize_radicand();

  static void unify(Quadratic& x, Quadratic& y) {
    if (x.in_base() || y.in_base() || same(x.d_, y.d_)) {
      if (x.in_base()) x.d_ = y.d_;
      else y.d_ = x.d_;
      return;
    }
    if constexpr (std::same_as<Base, Rational>) {
      Rational s;
      if (rational_sqrt(y.d_ / x.d_, s)) {
        y.b_ *= s;
        y.d_ = x.d_;
        return;
      }
    }
    throw std::domain_error("arithmetic on surds with incompatible radicands");
  }
};

/// Surd a + b*sqrt(d) over the rationals.
using Surd = Quadratic<Rational>;

template <>
void Quadratic<Rational>::normalize_radicand();

template <class Base>
void Quadratic<Base>::normalize_radicand() {
  if constexpr (std::same_as<Base, Rational>) {
    // never reached: specialised in quadratic.cpp
  } else {
    if (d_.in_base()) {
      if (auto root = exact_sqrt(d_.a())) {
        a_ = a_ + b_ * Base(*root);
        b_ = Base{};
        d_ = Base{};
      }
    }
  }
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  Rational r;
  if (rational_sqrt(q, r)) return r;
  return std::nullopt;
}

template <class B>
std::optional<Quadratic<B>> exact_sqrt(const Quadratic<B>& q) {
  if (!q.in_base()) return std::nullopt;
  if (auto r = exact_sqrt(q.a())) return Quadratic<B>(*r);
  return std::nullopt;
}

template <class B>
Quadratic<B> abs(const Quadratic<B>& q) {
  return sign(q) < 0 ? -q : q;
}

/// Integer power for any of the field types.
template <class F>
F power(F x, int e) {
  if (e < 0) return F(1) / power(std::move(x), -e);
  F result(1);
  while (e > 0) {
    if (e & 1) result = result * x;
    e >>= 1;
    if (e) x = x * x;
  }
  return result;
}

template <class B>
mpf_class to_mpf(const Quadratic<B>& q, mp_bitcnt_t bits) {
  mpf_class v = to_mpf(q.a(), bits);
  if (!q.in_base()) {
    mpf_class root(to_mpf(q.radicand(), bits), bits);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    v += to_mpf(q.b(), bits) * root;
  }
  return v;
}

template <class B>
double to_double(const Quadratic<B>& q) {
  return to_mpf(q, 256).get_d();
}

template <class B>
std::string to_decimal(const Quadratic<B>& q, int digits = 12) {
  if (q.in_base()) return to_decimal(q.a(), digits);
  return to_decimal(from_mpf(to_mpf(q, static_cast<mp_bitcnt_t>(digits * 4 + 256))), digits);
}

/// True when x - y is representable without a second radicand.
bool compatible(const Surd& x, const Surd& y);

/// Exact sign of x - y for surds with arbitrary radicands.
int compare(const Surd& x, const Surd& y);
inline int compare(const Rational& x, const Rational& y) { return x < y ? -1 : (y < x ? 1 : 0); }

/// Human form "p/q + (r/s)*sqrt(u/v)", or "p/q" when rational.
std::string to_string(const Surd& s);
inline std::string to_string(const Rational& q) { return q.to_string(); }

/// Compact form "a/b+c/d*sqrt(e/f)" used in serialised files.
std::string to_surd_string(const Surd& s);
inline std::string to_surd_string(const Rational& q) { return q.to_string(); }

/// Accepts both printed forms, with or without spaces and parentheses.
Surd parse_surd(std::string_view text);

template <class B>
std::string to_string(const Quadratic<Quadratic<B>>& q) {
  if (q.in_base()) return to_string(q.a());
  return "(" + to_string(q.a()) + ") + (" + to_string(q.b()) + ")*sqrt(" + to_string(q.radicand()) + ")";
}

}  // namespace cliquemin

namespace Eigen {

template <class B>
struct NumTraits<cliquemin::Quadratic<B>> : GenericNumTraits<cliquemin::Quadratic<B>> {
  using Real = cliquemin::Quadratic<B>;
  using NonInteger = cliquemin::Quadratic<B>;
  using Nested = cliquemin::Quadratic<B>;
  using Literal = cliquemin::Quadratic<B>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 60,
    MulCost = 150
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
