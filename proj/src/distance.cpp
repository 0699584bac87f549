#include "cliquemin/distance.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cliquemin/canonical.hpp"

namespace cliquemin {

namespace {

void require_same_order(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("graphs must have the same number of vertices");
}

// ---------------------------------------------------------------- cut

std::vector<std::vector<int>> difference_matrix(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = int(g.has_edge(u, v)) - int(h.has_edge(u, v));
  return d;
}

long best_response_value(const std::vector<long>& col) {
  long pos = 0, neg = 0;
  for (long x : col) (x > 0 ? pos : neg) += x;
  return std::max(pos, -neg);
}

long cut_exact(const std::vector<std::vector<int>>& d, int n) {
  std::vector<long> col(static_cast<std::size_t>(n), 0);
  std::uint64_t in_s = 0;
  long best = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int b = std::countr_zero(i);
    const long dir = (in_s >> b) & 1U ? -1 : 1;
    in_s ^= std::uint64_t{1} << b;
    const auto& row = d[static_cast<std::size_t>(b)];
    for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] += dir * row[static_cast<std::size_t>(v)];
    best = std::max(best, best_response_value(col));
  }
  return best;
}

long cut_heuristic(const std::vector<std::vector<int>>& d, int n, std::uint64_t seed, int starts) {
  std::mt19937_64 rng(seed);
  long best = 0;
  auto sum_over = [&](const std::vector<char>& s, const std::vector<char>& t) {
    long total = 0;
    for (int u = 0; u < n; ++u)
      if (s[static_cast<std::size_t>(u)])
        for (int v = 0; v < n; ++v)
          if (t[static_cast<std::size_t>(v)]) total += d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return total;
  };
  for (int start = 0; start < starts; ++start) {
    for (long sgn : {1L, -1L}) {
      std::vector<char> s(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n), 0);
      for (auto& x : s) x = static_cast<char>(rng() & 1U);
      long value = sgn * sum_over(s, t);
      for (;;) {
        // best T for S, then best S for T; each step cannot decrease the value
        for (int v = 0; v < n; ++v) {
          long c = 0;
          for (int u = 0; u < n; ++u)
            if (s[static_cast<std::size_t>(u)]) c += d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          t[static_cast<std::size_t>(v)] = sgn * c > 0;
        }
        for (int u = 0; u < n; ++u) {
          long c = 0;
          for (int v = 0; v < n; ++v)
            if (t[static_cast<std::size_t>(v)]) c += d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          s[static_cast<std::size_t>(u)] = sgn * c > 0;
        }
        const long next = sgn * sum_over(s, t);
        if (next <= value) break;
        value = next;
      }
      best = std::max(best, value);
    }
  }
  return best;
}

// ---------------------------------------------------------------- edit

long mismatch_cost(const Graph& g, const Graph& h, const std::vector<int>& phi) {
  long cost = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      cost += g.has_edge(u, v) != h.has_edge(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]);
  return cost;
}

long edit_heuristic(const Graph& g, const Graph& h, std::vector<int>& phi) {
  const int n = g.order();
  std::vector<int> og(static_cast<std::size_t>(n)), oh(static_cast<std::size_t>(n));
  std::iota(og.begin(), og.end(), 0);
  std::iota(oh.begin(), oh.end(), 0);
  std::stable_sort(og.begin(), og.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::stable_sort(oh.begin(), oh.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  phi.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(og[static_cast<std::size_t>(i)])] = oh[static_cast<std::size_t>(i)];
  long cost = mismatch_cost(g, h, phi);
  // change in cost when the images of a and b are exchanged
  auto swap_delta = [&](int a, int b) {
    const int pa = phi[static_cast<std::size_t>(a)], pb = phi[static_cast<std::size_t>(b)];
    long delta = 0;
    for (int v = 0; v < n; ++v) {
      if (v == a || v == b) continue;
      const int pv = phi[static_cast<std::size_t>(v)];
      delta += (g.has_edge(a, v) != h.has_edge(pb, pv)) - (g.has_edge(a, v) != h.has_edge(pa, pv));
      delta += (g.has_edge(b, v) != h.has_edge(pa, pv)) - (g.has_edge(b, v) != h.has_edge(pb, pv));
    }
    return delta;
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (const long delta = swap_delta(a, b); delta < 0) {
          std::swap(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
          cost += delta;
          improved = true;
        }
  }
  return cost;
}

struct EditSearch {
  const Graph& g;
  const Graph& h;
  int n;
  std::vector<int> order;  // g vertices in assignment order
  std::vector<int> phi, best_phi;
  long best;

  long bound(int depth, VertexSet assigned_g, VertexSet used_h) const {
    const VertexSet free_g = g.all_vertices() & ~assigned_g;
    const VertexSet free_h = h.all_vertices() & ~used_h;
    long lb = 0;
    for (int i = 0; i < depth; ++i) {
      const int x = order[static_cast<std::size_t>(i)];
      lb += std::abs(std::popcount(g.neighbours(x) & free_g) -
                     std::popcount(h.neighbours(phi[static_cast<std::size_t>(x)]) & free_h));
    }
    const auto inside = [](const Graph& gr, VertexSet s) {
      long e = 0;
      for (VertexSet t = s; t; t &= t - 1) e += std::popcount(gr.neighbours(std::countr_zero(t)) & s);
      return e / 2;
    };
    return lb + std::abs(inside(g, free_g) - inside(h, free_h));
  }

  void run(int depth, VertexSet assigned_g, VertexSet used_h, long cost) {
    if (cost + bound(depth, assigned_g, used_h) >= best) return;
    if (depth == n) {
      best = cost;
      best_phi = phi;
      return;
    }
    const int x = order[static_cast<std::size_t>(depth)];
    VertexSet image_of_nbrs = 0;
    for (VertexSet t = g.neighbours(x) & assigned_g; t; t &= t - 1)
      image_of_nbrs |= VertexSet{1} << phi[static_cast<std::size_t>(std::countr_zero(t))];
    for (int y = 0; y < n; ++y) {
      if ((used_h >> y) & 1U) continue;
      const long added = std::popcount(image_of_nbrs ^ (h.neighbours(y) & used_h));
      phi[static_cast<std::size_t>(x)] = y;
      run(depth + 1, assigned_g | (VertexSet{1} << x), used_h | (VertexSet{1} << y), cost + added);
    }
  }
};

}  // namespace

Rational cut_discrepancy(const Graph& g, const Graph& h, SearchMode mode, std::uint64_t seed, int starts) {
  require_same_order(g, h);
  const int n = g.order();
  if (n == 0) return Rational(0);
  if (mode == SearchMode::exact && n > 24) throw std::domain_error("exact cut discrepancy supports n <= 24");
  const auto d = difference_matrix(g, h);
  const long best = mode == SearchMode::exact ? cut_exact(d, n) : cut_heuristic(d, n, seed, starts);
  return Rational(best, static_cast<long>(n) * n);
}

long edit_distance(const Graph& g, const Graph& h, SearchMode mode, std::vector<int>& phi) {
  require_same_order(g, h);
  const int n = g.order();
  if (mode == SearchMode::exact && n > 9) throw std::domain_error("exact edit distance supports n <= 9");
  const long upper = edit_heuristic(g, h, phi);
  if (mode == SearchMode::heuristic || upper == std::abs(g.size() - h.size())) return upper;
  EditSearch search{g, h, n, {}, std::vector<int>(static_cast<std::size_t>(n), -1), phi, upper + 1};
  search.order.resize(static_cast<std::size_t>(n));
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  search.run(0, 0, 0, 0);
  phi = search.best_phi;
  return search.best;
}

long edit_distance(const Graph& g, const Graph& h, SearchMode mode) {
  std::vector<int> phi;
  return edit_distance(g, h, mode, phi);
}

namespace {

long degree_bound(const Graph& g, const Graph& h) {
  const auto a = g.degree_sequence(), b = h.degree_sequence();
  long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return (total + 1) / 2;
}

const std::vector<Graph>& graphs_on(int n) {
  static std::mutex lock;
  static std::map<int, std::vector<Graph>> cache;
  const std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_graphs(n)).first;
  return it->second;
}

}  // namespace

FamilyDistance distance_to_family(const Graph& g, int r, SearchMode mode) {
  const int n = g.order();
  if (n < 1) throw std::domain_error("distance_to_family needs n >= 1");
  if (mode == SearchMode::exact && n > 9) throw std::domain_error("exact distance_to_family supports n <= 9");
  if (n > 40) throw std::domain_error("distance_to_family supports n <= 40");
  if (r < 3) throw std::domain_error("distance_to_family needs r >= 3");
  const long m = g.size();

  struct Candidate {
    long bound;
    FamilyGraph member;
  };
  std::vector<Candidate> candidates;
  auto offer = [&](FamilyGraph f) {
    const long b = degree_bound(g, f.graph);
    candidates.push_back({b, std::move(f)});
  };

  for_each_family_shape(n, m, [&](const std::vector<int>& parts, long s) {
    const int k = static_cast<int>(parts.size());
    const int u = parts.back();
    if (mode == SearchMode::exact && u <= 7) {
      for (const Graph& block : graphs_on(u)) {
        if (block.size() != s || count_cliques(block, 3) != 0) continue;
        FamilyGraph f;
        f.graph = Graph::complete_multipartite(parts);
        for (int a = 0; a < u; ++a)
          for (int b = a + 1; b < u; ++b)
            if (block.has_edge(a, b)) f.graph.add_edge(n - u + a, n - u + b);
        f.k = k;
        f.part_sizes = parts;
        f.inner_edges = s;
        offer(std::move(f));
      }
    } else {
      offer(construct_family_member(n, m, k, parts));
    }
  });
  if (n <= 7) {
    for (const Graph& cand : graphs_on(n)) {
      if (cand.size() != m || count_cliques(cand, r) != 0) continue;
      FamilyGraph f;
      f.graph = cand;
      offer(std::move(f));
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.bound < b.bound; });
  FamilyDistance best;
  best.distance = -1;
  for (auto& cand : candidates) {
    if (best.distance >= 0 && cand.bound >= best.distance) break;
    const long d = edit_distance(g, cand.member.graph, mode);
    if (best.distance < 0 || d < best.distance) best = {d, cand.member};
    if (best.distance == 0) break;
  }
  return best;
}

}  // namespace cliquemin
