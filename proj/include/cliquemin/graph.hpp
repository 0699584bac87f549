#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemin/rational.hpp"

namespace cliquemin {

using VertexSet = std::uint64_t;

/// Simple undirected graph on at most 64 vertices, one adjacency bitset per vertex.
class Graph {
 public:
  static constexpr int max_order = 64;

  explicit Graph(int n = 0);

  static Graph complete(int n);
  static Graph empty(int n) { return Graph(n); }
  static Graph cycle(int n);
  static Graph path(int n);
  /// Complete multipartite graph; parts occupy consecutive vertex ranges.
  static Graph complete_multipartite(std::span<const int> part_sizes);
  static Graph turan(int r, int n);

  int order() const { return n_; }
  long size() const { return m_; }

  bool has_edge(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v) { has_edge(u, v) ? remove_edge(u, v) : add_edge(u, v); }

  VertexSet neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(neighbours(v)); }
  VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : ((VertexSet{1} << n_) - 1); }

  std::vector<int> degree_sequence() const;  // non-increasing
  Graph complement() const;
  /// Graph on the same vertex count with vertex v renamed to perm[v].
  Graph relabel(std::span<const int> perm) const;
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  long m_ = 0;
  std::vector<VertexSet> rows_;

  void check_pair(int u, int v) const;
};

// graph6 (standard encoding, bit-exact) and "u v" edge lists.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
/// Reads a graph file, detecting graph6 versus edge-list content.
Graph read_graph_file(const std::string& path);
Graph parse_graph(std::string_view text);

/// Edges in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<std::pair<int, int>> graph6_edge_order(int n);

// Clique counting and the Turan quantities.

/// e(T_r(n)).
long long turan_edges(int r, long long n);

/// Number of r-vertex cliques.
std::uint64_t count_cliques(const Graph& g, int r);
/// Number of r-cliques inside the vertex set `within`.
std::uint64_t count_cliques_in(const Graph& g, VertexSet within, int r);

/// t(K_r, W_G) = r! * (#K_r) / n^r.
Rational hom_density(const Graph& g, int r);

}  // namespace cliquemin
