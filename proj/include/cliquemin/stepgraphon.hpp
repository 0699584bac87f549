#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliquemin/graph.hpp"
#include "cliquemin/quadratic.hpp"
#include "cliquemin/rational.hpp"

namespace cliquemin {

/// Step graphon: finitely many parts with positive measures summing to one and
/// a symmetric [0,1]-valued matrix.  Scalar is Rational or Surd.
template <class Scalar>
class StepGraphon {
 public:
  using scalar_type = Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  StepGraphon() = default;
  StepGraphon(Vector measures, Matrix values) : mu_(std::move(measures)), w_(std::move(values)) { validate(); }

  int parts() const { return static_cast<int>(mu_.size()); }
  const Vector& measures() const { return mu_; }
  const Matrix& values() const { return w_; }
  const Scalar& measure(int i) const { return mu_(i); }
  const Scalar& value(int i, int j) const { return w_(i, j); }

 private:
  Vector mu_;
  Matrix w_;

  void validate() const {
    const Eigen::Index p = mu_.size();
    if (p == 0) throw std::domain_error("graphon needs at least one part");
    if (w_.rows() != p || w_.cols() != p) throw std::domain_error("value matrix must be parts x parts");
    Scalar total(0);
    for (Eigen::Index i = 0; i < p; ++i) {
      if (sign(mu_(i)) <= 0) throw std::domain_error("part measures must be positive");
      total += mu_(i);
      for (Eigen::Index j = 0; j < p; ++j) {
        if (sign(w_(i, j) - w_(j, i)) != 0) throw std::domain_error("value matrix must be symmetric");
        if (sign(w_(i, j)) < 0 || sign(w_(i, j) - Scalar(1)) > 0) throw std::domain_error("values must lie in [0,1]");
      }
    }
    if (sign(total - Scalar(1)) != 0) throw std::domain_error("part measures must sum to 1");
  }
};

using Graphon = StepGraphon<Surd>;

/// Default cap on the number of part multisets visited by clique_sum.
inline constexpr long long clique_term_budget = 10'000'000;

/// Sum over ordered r-tuples of parts of prod weight(i_a) * prod_{a<b} W(i_a, i_b).
/// With weight = mu this is t(K_r, W); rooted densities use reweighted vectors.
/// Visits multisets with multinomial weights and prunes zero factors.
template <class Matrix, class Vector>
typename Vector::Scalar clique_sum(const Matrix& w, const Vector& weight, int r,
                                   long long budget = clique_term_budget) {
  using Scalar = typename Vector::Scalar;
  if (r < 0) throw std::domain_error("clique order must be non-negative");
  if (r == 0) return Scalar(1);
  const int p = static_cast<int>(weight.size());
  std::vector<int> live;
  for (int i = 0; i < p; ++i)
    if (sign(weight(i)) != 0) live.push_back(i);
  if (binomial(static_cast<long>(live.size()) + r - 1, r) > mpz_class(static_cast<long>(budget)))
    throw std::domain_error("clique_sum: term count exceeds budget");

  Scalar total(0);
  std::vector<int> chosen(static_cast<std::size_t>(r));
  const mpz_class r_fact = factorial(r);
  auto rec = [&](auto&& self, int depth, std::size_t from, const Scalar& prod, const mpz_class& denom,
                 int run) -> void {
    if (depth == r) {
      total += prod * Scalar(Rational(r_fact, denom));
      return;
    }
    for (std::size_t li = from; li < live.size(); ++li) {
      const int j = live[li];
      Scalar factor = weight(j);
      for (int a = 0; a < depth && sign(factor) != 0; ++a) factor = factor * w(chosen[static_cast<std::size_t>(a)], j);
      if (sign(factor) == 0) continue;
      const bool repeat = depth > 0 && chosen[static_cast<std::size_t>(depth - 1)] == j;
      const int next_run = repeat ? run + 1 : 1;
      chosen[static_cast<std::size_t>(depth)] = j;
      self(self, depth + 1, li, Scalar(prod * factor), mpz_class(denom * next_run), next_run);
    }
  };
  rec(rec, 0, 0, Scalar(1), mpz_class(1), 0);
  return total;
}

/// t(K_r, W).
template <class S>
S clique_density(const StepGraphon<S>& w, int r) {
  if (r < 1) throw std::domain_error("clique_density needs r >= 1");
  return clique_sum(w.values(), w.measures(), r);
}

/// d_W on every part.
template <class S>
typename StepGraphon<S>::Vector degrees(const StepGraphon<S>& w) {
  return w.values() * w.measures();
}

template <class S>
S degree(const StepGraphon<S>& w, int part) {
  if (part < 0 || part >= w.parts()) throw std::out_of_range("part index out of range");
  return w.values().row(part).dot(w.measures());
}

/// t_x(K_t, W) for one root or t_{x,y}(K_r^-, W) for two roots.
struct RootedDensityRequest {
  enum class Pattern { clique, clique_minus };
  Pattern pattern = Pattern::clique;
  int order = 2;
  std::vector<int> roots;
};

template <class S>
S rooted_density(const StepGraphon<S>& w, const RootedDensityRequest& req) {
  const std::size_t want = req.pattern == RootedDensityRequest::Pattern::clique ? 1 : 2;
  if (req.roots.size() != want) throw std::domain_error("rooted_density: wrong number of roots for pattern");
  for (int x : req.roots)
    if (x < 0 || x >= w.parts()) throw std::out_of_range("rooted_density: root part out of range");
  const int x = req.roots[0];
  if (req.pattern == RootedDensityRequest::Pattern::clique) {
    if (req.order < 1) throw std::domain_error("rooted clique needs order >= 1");
    const typename StepGraphon<S>::Vector weight = w.values().row(x).transpose().cwiseProduct(w.measures());
    return clique_sum(w.values(), weight, req.order - 1);
  }
  if (req.order < 2) throw std::domain_error("K_r^- needs r >= 2");
  const int y = req.roots[1];
  const typename StepGraphon<S>::Vector weight =
      w.values().row(x).transpose().cwiseProduct(w.values().row(y).transpose()).cwiseProduct(w.measures());
  return clique_sum(w.values(), weight, req.order - 2);
}

template <class S>
S rooted_clique(const StepGraphon<S>& w, int part, int t) {
  return rooted_density(w, {RootedDensityRequest::Pattern::clique, t, {part}});
}

template <class S>
S rooted_clique_minus(const StepGraphon<S>& w, int x, int y, int r) {
  return rooted_density(w, {RootedDensityRequest::Pattern::clique_minus, r, {x, y}});
}

/// Restriction to the chosen parts with measures renormalised.
template <class S>
StepGraphon<S> induced(const StepGraphon<S>& w, const std::vector<int>& parts) {
  if (parts.empty()) throw std::domain_error("induced: empty selection");
  const auto n = static_cast<Eigen::Index>(parts.size());
  typename StepGraphon<S>::Vector mu(n);
  typename StepGraphon<S>::Matrix vals(n, n);
  S total(0);
  for (Eigen::Index a = 0; a < n; ++a) {
    const int i = parts[static_cast<std::size_t>(a)];
    if (i < 0 || i >= w.parts()) throw std::out_of_range("induced: part index out of range");
    mu(a) = w.measure(i);
    total += mu(a);
    for (Eigen::Index b = 0; b < n; ++b) vals(a, b) = w.value(i, parts[static_cast<std::size_t>(b)]);
  }
  for (Eigen::Index a = 0; a < n; ++a) mu(a) = mu(a) / total;
  return StepGraphon<S>(std::move(mu), std::move(vals));
}

/// N_W(x): measure reweighted by W(x, .)/d_W(x).  Parts that receive zero
/// measure are dropped; `kept` (optional) reports the surviving indices.
template <class S>
StepGraphon<S> neighbourhood(const StepGraphon<S>& w, int part, std::vector<int>* kept = nullptr) {
  const S d = degree(w, part);
  if (sign(d) == 0) throw std::domain_error("neighbourhood of a zero-degree part");
  std::vector<int> idx;
  for (int j = 0; j < w.parts(); ++j)
    if (sign(w.value(part, j)) != 0) idx.push_back(j);
  const auto n = static_cast<Eigen::Index>(idx.size());
  typename StepGraphon<S>::Vector mu(n);
  typename StepGraphon<S>::Matrix vals(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const int j = idx[static_cast<std::size_t>(a)];
    mu(a) = w.value(part, j) * w.measure(j) / d;
    for (Eigen::Index b = 0; b < n; ++b) vals(a, b) = w.value(j, idx[static_cast<std::size_t>(b)]);
  }
  if (kept) *kept = idx;
  return StepGraphon<S>(std::move(mu), std::move(vals));
}

/// W_G: n parts of measure 1/n with the adjacency matrix as values.
template <class S = Rational>
StepGraphon<S> from_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::domain_error("from_graph needs a non-empty graph");
  typename StepGraphon<S>::Vector mu = StepGraphon<S>::Vector::Constant(n, S(Rational(1, n)));
  typename StepGraphon<S>::Matrix vals = StepGraphon<S>::Matrix::Constant(n, n, S(0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) vals(u, v) = S(1);
  return StepGraphon<S>(std::move(mu), std::move(vals));
}

template <class S = Rational>
StepGraphon<S> constant_graphon(const S& p) {
  typename StepGraphon<S>::Vector mu(1);
  mu(0) = S(1);
  typename StepGraphon<S>::Matrix vals(1, 1);
  vals(0, 0) = p;
  return StepGraphon<S>(std::move(mu), std::move(vals));
}

/// Moves delta of measure from part `from` to part `to`.
template <class S>
StepGraphon<S> transfer_measure(const StepGraphon<S>& w, int from, int to, const S& delta) {
  typename StepGraphon<S>::Vector mu = w.measures();
  mu(from) = mu(from) - delta;
  mu(to) = mu(to) + delta;
  return StepGraphon<S>(std::move(mu), w.values());
}

template <class To, class From>
StepGraphon<To> graphon_cast(const StepGraphon<From>& w) {
  return StepGraphon<To>(w.measures().template cast<To>(), w.values().template cast<To>());
}

/// True when w is weakly isomorphic to W_{K_t} for some t: after merging parts
/// with identical rows, t parts of measure 1/t, zero diagonal, one elsewhere.
template <class S>
bool is_turan_graphon(const StepGraphon<S>& w, int* t_out = nullptr) {
  const int p = w.parts();
  std::vector<int> rep(static_cast<std::size_t>(p), -1);
  std::vector<int> classes;
  std::vector<S> mass;
  for (int i = 0; i < p; ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const int j = classes[c];
      bool same = true;
      for (int x = 0; x < p && same; ++x) same = sign(w.value(i, x) - w.value(j, x)) == 0;
      if (same) {
        rep[static_cast<std::size_t>(i)] = static_cast<int>(c);
        mass[c] += w.measure(i);
        break;
      }
    }
    if (rep[static_cast<std::size_t>(i)] < 0) {
      rep[static_cast<std::size_t>(i)] = static_cast<int>(classes.size());
      classes.push_back(i);
      mass.push_back(w.measure(i));
    }
  }
  const int t = static_cast<int>(classes.size());
  for (int a = 0; a < t; ++a) {
    if (sign(mass[static_cast<std::size_t>(a)] - S(Rational(1, t))) != 0) return false;
    for (int b = 0; b < t; ++b) {
      const S& v = w.value(classes[static_cast<std::size_t>(a)], classes[static_cast<std::size_t>(b)]);
      if (sign(v - S(a == b ? 0 : 1)) != 0) return false;
    }
  }
  if (t_out) *t_out = t;
  return true;
}

/// Deterministic seed-driven uniform double in [0, 1).
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// n-vertex W-random graph: part labels drawn by measure, edges independently with probability W.
template <class S>
Graph sample_w_random(const StepGraphon<S>& w, int n, std::uint64_t seed) {
  if (n < 0 || n > Graph::max_order) throw std::domain_error("sample_w_random supports n <= 64");
  std::mt19937_64 rng(seed);
  std::vector<double> cumulative;
  double acc = 0;
  for (int i = 0; i < w.parts(); ++i) cumulative.push_back(acc += to_double(w.measure(i)));
  std::vector<int> label(static_cast<std::size_t>(n));
  for (auto& l : label) {
    const double x = unit_draw(rng) * acc;
    l = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), x) - cumulative.begin());
    l = std::min(l, w.parts() - 1);
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const S& p = w.value(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
      const double draw = unit_draw(rng);
      // 0 and 1 are decided exactly so constant graphons give K_n and the empty graph
      const bool edge = sign(p) == 0 ? false : (sign(p - S(1)) == 0 ? true : draw < to_double(p));
      if (edge) g.add_edge(u, v);
    }
  return g;
}

// JSON {"parts": [{"measure": "<surd>"}], "values": [["p/q", ...], ...]}.
nlohmann::json to_json(const Graphon& w);
Graphon graphon_from_json(const nlohmann::json& j);
Graphon read_graphon_file(const std::string& path);
void write_graphon_file(const std::string& path, const Graphon& w);

// ---------------------------------------------------------------- extremal

/// Member of the graphon family at (r, alpha): k - 1 parts of measure c and the
/// block of measure b = 1 - (k-1)c realised as the complete bipartite split (c, b - c).
struct ExtremalGraphon {
  Graphon base;
  int r = 3;
  Rational alpha;
  int k = 1;
  Surd c;
  Surd inner_split;              // c / b, fraction of the block in its first sub-part
  std::vector<int> block_parts;  // indices of the block's sub-parts in `base`
};

ExtremalGraphon construct_extremal(int r, const Rational& alpha);

}  // namespace cliquemin
