#include "cliquemin/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cliquemin {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > max_order) throw std::domain_error("graph order must be in [0, 64]");
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::domain_error("loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
  rows_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(VertexSet{1} << u);
  --m_;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) throw std::domain_error("negative part size");
    n += s;
  }
  Graph g(n);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

Graph Graph::turan(int r, int n) {
  if (r < 1) throw std::domain_error("turan graph needs r >= 1");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
  return complete_multipartite(sizes);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

// ---------------------------------------------------------------- graph6

std::vector<std::pair<int, int>> graph6_edge_order(int n) {
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) order.emplace_back(u, v);
  return order;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, bits = 0;
  for (auto [u, v] : graph6_edge_order(n)) {
    acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
    if (++bits == 6) {
      out.push_back(static_cast<char>(63 + acc));
      acc = bits = 0;
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  auto byte = [&](std::size_t i) {
    if (i >= text.size()) throw std::invalid_argument("graph6: truncated input");
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t pos = 0;
  int n = byte(0);
  pos = 1;
  if (n == 63) {
    if (byte(1) == 63) throw std::domain_error("graph6: order exceeds 64");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > Graph::max_order) throw std::domain_error("graph6: order exceeds 64");
  Graph g(n);
  const auto order = graph6_edge_order(n);
  const std::size_t need = (order.size() + 5) / 6;
  if (text.size() != pos + need) throw std::invalid_argument("graph6: wrong length for order " + std::to_string(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int chunk = byte(pos + i / 6);
    if ((chunk >> (5 - static_cast<int>(i % 6))) & 1) g.add_edge(order[i].first, order[i].second);
  }
  return g;
}

// ---------------------------------------------------------------- edge lists

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n " << g.order() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      int value = 0;
      if (comment >> key >> value && key == "n") n = value;
      line.resize(hash);
    }
    std::istringstream ls(line);
    int u = 0, v = 0;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw std::invalid_argument("edge list: line needs two vertices: " + line);
    std::string rest;
    if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens: " + line);
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex");
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(u, v);
  }
  if (n < 0) n = max_vertex + 1;
  if (max_vertex >= n) throw std::invalid_argument("edge list: vertex exceeds declared order");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_graph(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  const bool one_token = trimmed.find_first_of(" \t\n#") == std::string_view::npos;
  const bool has_digit_only = !trimmed.empty() && std::all_of(trimmed.begin(), trimmed.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch));
  });
  if (trimmed.starts_with(">>graph6<<") || (one_token && !trimmed.empty() && !has_digit_only))
    return from_graph6(trimmed);
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

// ---------------------------------------------------------------- cliques

long long turan_edges(int r, long long n) {
  if (r < 1 || n < 0) throw std::domain_error("turan_edges needs r >= 1, n >= 0");
  const long long q = n / r, rem = n % r;
  // sum over pairs of parts of size products: (n^2 - sum s_i^2) / 2
  const long long squares = rem * (q + 1) * (q + 1) + (r - rem) * q * q;
  return (n * n - squares) / 2;
}

namespace {

std::uint64_t count_rec(const Graph& g, VertexSet cand, int need) {
  if (need == 0) return 1;
  if (need == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  if (std::popcount(cand) < need) return 0;
  if (need == 2) {
    std::uint64_t total = 0;
    for (VertexSet c = cand; c;) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      total += static_cast<std::uint64_t>(std::popcount(g.neighbours(v) & c));
    }
    return total;
  }
  std::uint64_t total = 0;
  for (VertexSet c = cand; c;) {
    const int v = std::countr_zero(c);
    c &= c - 1;
    const VertexSet next = g.neighbours(v) & c;
    if (std::popcount(next) >= need - 1) total += count_rec(g, next, need - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques_in(const Graph& g, VertexSet within, int r) {
  if (r < 0) throw std::domain_error("clique order must be non-negative");
  return count_rec(g, within & g.all_vertices(), r);
}

std::uint64_t count_cliques(const Graph& g, int r) { return count_cliques_in(g, g.all_vertices(), r); }

Rational hom_density(const Graph& g, int r) {
  if (r < 1) throw std::domain_error("hom_density needs r >= 1");
  if (g.order() == 0) return Rational(0);
  const mpz_class num = factorial(r) * mpz_class(static_cast<unsigned long>(count_cliques(g, r)));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(g.order()), static_cast<unsigned long>(r));
  return Rational(num, den);
}

}  // namespace cliquemin
