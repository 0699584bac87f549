#include "cliquemin/scallop.hpp"
#include "cliquemin/stepgraphon.hpp"

namespace cliquemin {

ExtremalGraphon construct_extremal(int r, const Rational& alpha) {
  if (r < 3) throw std::domain_error("construct_extremal needs r >= 3");
  if (alpha.sign() < 0 || alpha > Rational(1)) throw std::domain_error("construct_extremal: alpha must lie in [0,1]");
  ExtremalGraphon e;
  e.r = r;
  e.alpha = alpha;
  if (alpha == Rational(1)) {
    e.base = constant_graphon(Surd(1));
    e.k = 1;
    e.c = Surd(1);
    e.inner_split = Surd(1);
    e.block_parts = {0};
    return e;
  }
  e.k = k_of_alpha(alpha);
  e.c = c_of_alpha(alpha);
  const Surd b = Surd(1) - Surd(e.k - 1) * e.c;
  const Surd rest = b - e.c;
  e.inner_split = e.c / b;

  // k parts of measure c, then the leftover sub-part of the block when it has positive measure
  std::vector<Surd> measures(static_cast<std::size_t>(e.k), e.c);
  if (sign(rest) > 0) measures.push_back(rest);
  const auto p = static_cast<Eigen::Index>(measures.size());
  Graphon::Vector mu(p);
  for (Eigen::Index i = 0; i < p; ++i) mu(i) = measures[static_cast<std::size_t>(i)];
  Graphon::Matrix vals = Graphon::Matrix::Constant(p, p, Surd(1));
  for (Eigen::Index i = 0; i < p; ++i) vals(i, i) = Surd(0);
  e.base = Graphon(std::move(mu), std::move(vals));
  e.block_parts = {e.k - 1};
  if (p > e.k) e.block_parts.push_back(e.k);
  return e;
}

}  // namespace cliquemin
