#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "json.hpp"

#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"

namespace cliquemin {

/// Member of the finite family: complete k-partite scaffold on V_1..V_{k-1}, U
/// with a triangle-free graph of `inner_edges` edges inside U.
///
/// part_sizes lists |V_1|..|V_{k-1}| followed by |U|.  A K_r-free member with no
/// scaffold structure is recorded with k = 0 and no parts.
struct FamilyGraph {
  Graph graph;
  int k = 0;
  std::vector<int> part_sizes;
  long inner_edges = 0;
};

nlohmann::json to_json(const FamilyGraph& f);
FamilyGraph family_from_json(const nlohmann::json& j);

/// H_{alpha,n}: parts of size floor(c n) for V_1..V_k, remainder in V_{k+1},
/// with U = V_k + V_{k+1} carrying K(V_k, V_{k+1}).  alpha = 1 gives K_n.
FamilyGraph construct_H_alpha_n(const Rational& alpha, int n);

/// Scaffold on part_sizes (last entry is U) plus a bipartite block with exactly
/// m - (scaffold edges) edges, the lexicographically first ones of K(U_1, U_2).
FamilyGraph construct_family_member(int n, long m, int k, const std::vector<int>& part_sizes);

/// Number of scaffold edges, i.e. e_2 of the part sizes.
long scaffold_edges(const std::vector<int>& part_sizes);

/// K_r count of any family member with these parts and s block edges.
mpz_class family_clique_count(const std::vector<int>& part_sizes, long s, int r);

struct FamilyOptimum {
  mpz_class count;
  FamilyGraph witness;
};

/// H_r(n, m): minimum over every k and part vector (V_1 >= ... >= V_{k-1}, |U| >= 1).
/// Ties are broken by smallest k, then lexicographically smallest part_sizes.
FamilyOptimum family_minimum_H(int n, long m, int r);

/// Calls fn(part_sizes, s) for every feasible scaffold of (n, m): |U| descending,
/// then V_1 >= ... >= V_{k-1} in reverse lexicographic order.
void for_each_family_shape(int n, long m, const std::function<void(const std::vector<int>&, long)>& fn);

}  // namespace cliquemin
