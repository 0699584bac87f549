#include "cliquemin/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cliquemin/quadratic.hpp"
#include "cliquemin/scallop.hpp"

namespace cliquemin {

namespace {

long floor_of(const Surd& x) {
  long guess = static_cast<long>(std::floor(to_double(x)));
  while (sign(x - Surd(Rational(guess))) < 0) --guess;
  while (sign(x - Surd(Rational(guess + 1))) >= 0) ++guess;
  return guess;
}

// Elementary symmetric polynomials e_0..e_r of the given sizes.
std::vector<mpz_class> elementary(const std::vector<int>& sizes, int r) {
  std::vector<mpz_class> e(static_cast<std::size_t>(std::max(r, 0) + 1), 0);
  e[0] = 1;
  for (int s : sizes)
    for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * s;
  return e;
}

// Bipartite block on U with halves floor(u/2), ceil(u/2); first s edges in lexicographic order.
void add_block(Graph& g, int first, int u, long s) {
  const int left = u / 2;
  long placed = 0;
  for (int a = 0; a < left && placed < s; ++a)
    for (int b = left; b < u && placed < s; ++b, ++placed) g.add_edge(first + a, first + b);
}

}  // namespace

long scaffold_edges(const std::vector<int>& part_sizes) {
  long total = 0, before = 0;
  for (int s : part_sizes) {
    total += before * s;
    before += s;
  }
  return total;
}

mpz_class family_clique_count(const std::vector<int>& part_sizes, long s, int r) {
  if (r < 2) throw std::domain_error("family_clique_count needs r >= 2");
  const auto all = elementary(part_sizes, r);
  std::vector<int> outside(part_sizes.begin(), part_sizes.end() - (part_sizes.empty() ? 0 : 1));
  const auto rest = elementary(outside, r - 2);
  return all[static_cast<std::size_t>(r)] + mpz_class(s) * rest[static_cast<std::size_t>(r - 2)];
}

FamilyGraph construct_family_member(int n, long m, int k, const std::vector<int>& part_sizes) {
  if (k < 1 || static_cast<int>(part_sizes.size()) != k)
    throw std::domain_error("construct_family_member: part_sizes must list k entries");
  if (std::any_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s < 0; }) ||
      std::accumulate(part_sizes.begin(), part_sizes.end(), 0) != n)
    throw std::domain_error("construct_family_member: part sizes must be non-negative and sum to n");
  const int u = part_sizes.back();
  const long s = m - scaffold_edges(part_sizes);
  if (s < 0 || s > static_cast<long>(turan_edges(2, u)))
    throw std::domain_error("construct_family_member: block edge count " + std::to_string(s) + " infeasible");
  FamilyGraph f;
  f.graph = Graph::complete_multipartite(part_sizes);
  add_block(f.graph, n - u, u, s);
  f.k = k;
  f.part_sizes = part_sizes;
  f.inner_edges = s;
  return f;
}

FamilyGraph construct_H_alpha_n(const Rational& alpha, int n) {
  if (n < 1) throw std::domain_error("construct_H_alpha_n needs n >= 1");
  if (alpha == Rational(1)) {
    FamilyGraph f;
    f.graph = Graph::complete(n);
    f.k = n;
    f.part_sizes.assign(static_cast<std::size_t>(n), 1);
    return f;
  }
  const int k = k_of_alpha(alpha);
  const long size = floor_of(c_of_alpha(alpha) * Surd(Rational(n)));
  const long rest = n - static_cast<long>(k) * size;
  if (size < 1 || rest < 0)
    throw std::domain_error("construct_H_alpha_n: n = " + std::to_string(n) + " too small for alpha = " +
                            alpha.to_string());
  std::vector<int> parts(static_cast<std::size_t>(k - 1), static_cast<int>(size));
  parts.push_back(static_cast<int>(size + rest));
  return construct_family_member(n, scaffold_edges(parts) + size * rest, k, parts);
}

void for_each_family_shape(int n, long m, const std::function<void(const std::vector<int>&, long)>& fn) {
  std::vector<int> parts;
  // cross counts edges from the placed parts to everything after them
  std::function<void(int, int, int, long)> rec = [&](int remaining, int cap, int u, long cross) {
    if (remaining == 0) {
      const long block = m - cross;
      if (block >= 0 && block <= static_cast<long>(turan_edges(2, u))) {
        parts.push_back(u);
        fn(parts, block);
        parts.pop_back();
      }
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      const long added = static_cast<long>(p) * (u + remaining - p);
      if (cross + added > m) continue;
      parts.push_back(p);
      rec(remaining - p, p, u, cross + added);
      parts.pop_back();
    }
  };
  for (int u = n; u >= 1; --u) rec(n - u, n - u, u, 0);
}

FamilyOptimum family_minimum_H(int n, long m, int r) {
  if (n < 1 || n > 40) throw std::domain_error("family_minimum_H supports 1 <= n <= 40");
  if (m < 0 || m > static_cast<long>(n) * (n - 1) / 2) throw std::domain_error("family_minimum_H: m out of range");
  if (r < 2) throw std::domain_error("family_minimum_H needs r >= 2");
  bool found = false;
  mpz_class best;
  std::vector<int> best_parts;
  long best_s = 0;
  for_each_family_shape(n, m, [&](const std::vector<int>& parts, long s) {
    const mpz_class count = family_clique_count(parts, s, r);
    bool better = !found || count < best;
    if (found && count == best) {
      if (parts.size() != best_parts.size())
        better = parts.size() < best_parts.size();
      else
        better = parts < best_parts;
    }
    if (better) {
      found = true;
      best = count;
      best_parts = parts;
      best_s = s;
    }
  });
  if (!found) throw std::logic_error("family_minimum_H: no feasible member");
  return {best, construct_family_member(n, scaffold_edges(best_parts) + best_s, static_cast<int>(best_parts.size()),
                                        best_parts)};
}

nlohmann::json to_json(const FamilyGraph& f) {
  return {{"n", f.graph.order()},
          {"k", f.k},
          {"part_sizes", f.part_sizes},
          {"inner_edges", f.inner_edges},
          {"graph6", to_graph6(f.graph)}};
}

FamilyGraph family_from_json(const nlohmann::json& j) {
  FamilyGraph f;
  f.graph = from_graph6(j.at("graph6").get<std::string>());
  f.k = j.at("k").get<int>();
  f.part_sizes = j.at("part_sizes").get<std::vector<int>>();
  f.inner_edges = j.at("inner_edges").get<long>();
  if (j.at("n").get<int>() != f.graph.order()) throw std::invalid_argument("family json: n does not match graph6");
  return f;
}

}  // namespace cliquemin
