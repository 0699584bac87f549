#pragma once

#include <cstdint>
#include <vector>

#include "cliquemin/family.hpp"
#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"

namespace cliquemin {

enum class SearchMode { exact, heuristic };

/// max over S, T of |e_g(S,T) - e_h(S,T)| / n^2 with ordered pairs.
/// Exact mode enumerates S (n <= 24); the heuristic alternates best-response
/// S and T from seeded random starts and returns a lower bound.
Rational cut_discrepancy(const Graph& g, const Graph& h, SearchMode mode = SearchMode::exact,
                         std::uint64_t seed = 1, int starts = 64);

/// min over bijections phi of |E(g) xor phi(E(h))|.  Exact mode needs n <= 9;
/// the heuristic is an upper bound from degree alignment plus swap descent.
long edit_distance(const Graph& g, const Graph& h, SearchMode mode = SearchMode::exact);

/// Same as edit_distance, also returning the optimal map: phi[v] is the vertex of h matched to v.
long edit_distance(const Graph& g, const Graph& h, SearchMode mode, std::vector<int>& phi);

struct FamilyDistance {
  long distance = 0;
  FamilyGraph witness;
};

/// Edit distance from g to the nearest family member with e(g) edges.  Candidates:
/// every scaffold shape, plus (n <= 7) every K_r-free graph on n vertices and, in
/// exact mode, every triangle-free block on |U| <= 7 up to isomorphism.
FamilyDistance distance_to_family(const Graph& g, int r, SearchMode mode = SearchMode::exact);

}  // namespace cliquemin
