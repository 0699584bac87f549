#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cliquemin/graph.hpp"

namespace cliquemin {

struct CanonicalForm {
  Graph graph;                // relabelled graph
  std::vector<int> labeling;  // labeling[v] = canonical position of v
  std::string key;            // graph6 of `graph`, prefixed by colour classes when coloured
};

/// Canonical relabelling by ordered partition refinement and individualisation.
/// Picks the labelling whose adjacency bits, in graph6 order, form the least
/// word.  `colours` (optional) must be respected: vertices of smaller colour
/// receive smaller labels.  Practical for the desk-scale orders used here.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours = {});

bool isomorphic(const Graph& a, const Graph& b);

/// Calls fn on one representative of each isomorphism class of n-vertex graphs
/// (canonical augmentation by vertex addition).  n <= 10.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// All isomorphism classes on n vertices, as canonical representatives.
std::vector<Graph> generate_graphs(int n);

}  // namespace cliquemin
