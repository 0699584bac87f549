#include "cliquemin/quadratic.hpp"

#include <cctype>
#include <string>

namespace cliquemin {

namespace {

// Strips square factors p^2 for small primes; the cofactor may still hold
// large square factors, which unify() reconciles on demand.
void strip_small_squares(mpz_class& n, Rational& coefficient) {
  for (unsigned long p = 2; p <= 1000; p += (p == 2 ? 1 : 2)) {
    const unsigned long sq = p * p;
    if (mpz_cmp_ui(n.get_mpz_t(), sq) < 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), sq);
      coefficient *= Rational(static_cast<long>(p));
    }
  }
}

}  // namespace

template <>
void Quadratic<Rational>::normalize_radicand() {
  if (b_.is_zero() || d_.is_zero()) return;
  // sqrt(p/q) = sqrt(p q) / q
  mpz_class n = d_.num() * d_.den();
  b_ /= Rational(d_.den());
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    a_ += b_ * Rational(root);
    b_ = Rational{};
    d_ = Rational{};
    return;
  }
  strip_small_squares(n, b_);
  d_ = Rational(n);
}

bool compatible(const Surd& x, const Surd& y) {
  if (x.in_base() || y.in_base() || x.radicand() == y.radicand()) return true;
  Rational s;
  return rational_sqrt(y.radicand() / x.radicand(), s);
}

int compare(const Surd& x, const Surd& y) {
  if (compatible(x, y)) return sign(x - y);
  using Tower = Quadratic<Surd>;
  Tower lifted_x{Surd(x)};
  Tower lifted_y(Surd(y.a()), Surd(y.b()), Surd(y.radicand()));
  return sign(lifted_x - lifted_y);
}

std::string to_string(const Surd& s) {
  if (s.in_base()) return s.a().to_string();
  return s.a().to_string() + " + (" + s.b().to_string() + ")*sqrt(" + s.radicand().to_string() + ")";
}

std::string to_surd_string(const Surd& s) {
  if (s.in_base()) return s.a().to_string();
  std::string b = s.b().to_string();
  if (b[0] != '-') b = "+" + b;
  return s.a().to_string() + b + "*sqrt(" + s.radicand().to_string() + ")";
}

Surd parse_surd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const auto pos = s.find("*sqrt(");
  if (pos == std::string::npos) {
    if (s.find("sqrt") != std::string::npos) throw std::invalid_argument("malformed surd: '" + std::string(text) + "'");
    std::string plain;
    for (char ch : s)
      if (ch != '(' && ch != ')') plain.push_back(ch);
    return Surd(parse_rational(plain));
  }
  if (s.back() != ')') throw std::invalid_argument("malformed surd: '" + std::string(text) + "'");
  std::string radicand = s.substr(pos + 6, s.size() - pos - 7);
  std::string head = s.substr(0, pos);

  // split head into "a" and the signed coefficient at the last top-level +/-
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < head.size(); ++i) {
    char ch = head[i];
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if ((ch == '+' || ch == '-') && depth == 0 && i > 0) split = i;
  }
  auto unparen = [](std::string t) {
    std::string out;
    for (char ch : t)
      if (ch != '(' && ch != ')') out.push_back(ch);
    return out;
  };
  Rational a, b;
  if (split == std::string::npos) {
    b = parse_rational(unparen(head));
  } else {
    a = parse_rational(unparen(head.substr(0, split)));
    std::string coeff = unparen(head.substr(split + 1));
    b = parse_rational(coeff);
    if (head[split] == '-') b = -b;
  }
  return Surd(a, b, parse_rational(unparen(radicand)));
}

}  // namespace cliquemin
