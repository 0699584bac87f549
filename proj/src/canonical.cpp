#include "cliquemin/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cliquemin {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Code = std::vector<std::uint64_t>;

VertexSet mask_of(const Cell& cell) {
  VertexSet m = 0;
  for (int v : cell) m |= VertexSet{1} << v;
  return m;
}

// Split cells by neighbour counts into each cell until the partition is equitable.
// Every decision depends only on positions and counts, so the result is label-invariant.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells.size() && !changed; ++i) {
      const VertexSet splitter = mask_of(cells[i]);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        Cell& cell = cells[j];
        if (cell.size() == 1) continue;
        auto count = [&](int v) { return std::popcount(g.neighbours(v) & splitter); };
        const int first = count(cell.front());
        if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
        Partition pieces;
        for (int v : cell) {
          if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(j), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

Code code_of(const Graph& g, const Partition& cells) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < cells.size(); ++p) order[p] = cells[p].front();
  Code code(static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64), 0);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(order[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(v)]))
        code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
  return code;
}

bool twins(const Graph& g, int a, int b) {
  const VertexSet drop = (VertexSet{1} << a) | (VertexSet{1} << b);
  return (g.neighbours(a) & ~drop) == (g.neighbours(b) & ~drop);
}

struct Search {
  const Graph& g;
  bool have = false;
  Code best;
  Partition best_cells;

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      Code code = code_of(g, cells);
      if (!have || code < best) {
        have = true;
        best = std::move(code);
        best_cells = cells;
      }
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[idx]) {
      // swapping twins of one cell is an automorphism fixing everything individualised so far
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(g, v, w); })) continue;
      tried.push_back(v);
      Partition next = cells;
      Cell rest;
      for (int w : cells[idx])
        if (w != v) rest.push_back(w);
      next[idx] = Cell{v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(idx) + 1, rest);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours) {
  const int n = g.order();
  if (!colours.empty() && static_cast<int>(colours.size()) != n)
    throw std::invalid_argument("canonical_form: colour vector size mismatch");
  CanonicalForm out;
  if (n == 0) {
    out.graph = g;
    out.key = to_graph6(g);
    return out;
  }
  Partition start;
  std::string prefix;
  if (colours.empty()) {
    start.emplace_back();
    for (int v = 0; v < n; ++v) start.back().push_back(v);
  } else {
    std::vector<int> distinct = colours;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct) {
      start.emplace_back();
      for (int v = 0; v < n; ++v)
        if (colours[static_cast<std::size_t>(v)] == c) start.back().push_back(v);
      prefix += std::to_string(c) + ":" + std::to_string(start.back().size()) + ",";
    }
    prefix += "|";
  }
  Search search{g, false, {}, {}};
  search.run(std::move(start));
  out.labeling.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t p = 0; p < search.best_cells.size(); ++p)
    out.labeling[static_cast<std::size_t>(search.best_cells[p].front())] = static_cast<int>(p);
  out.graph = g.relabel(out.labeling);
  out.key = prefix + to_graph6(out.graph);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

namespace {

void extend(const Graph& parent, int target, const std::function<void(const Graph&)>& fn) {
  const int n = parent.order();
  if (n == target) {
    fn(parent);
    return;
  }
  const int v = n;
  std::set<std::string> seen;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    Graph child(n + 1);
    for (int a = 0; a < n; ++a)
      for (VertexSet row = parent.neighbours(a) & ~((VertexSet{2} << a) - 1); row; row &= row - 1)
        child.add_edge(a, std::countr_zero(row));
    for (VertexSet t = s; t; t &= t - 1) child.add_edge(v, std::countr_zero(t));

    const CanonicalForm form = canonical_form(child);
    if (seen.count(form.key)) continue;
    const int w = static_cast<int>(std::find(form.labeling.begin(), form.labeling.end(), n) - form.labeling.begin());
    if (w != v) {
      if (child.degree(w) != child.degree(v)) continue;
      std::vector<int> cv(static_cast<std::size_t>(n + 1), 0), cw(static_cast<std::size_t>(n + 1), 0);
      cv[static_cast<std::size_t>(v)] = 1;
      cw[static_cast<std::size_t>(w)] = 1;
      if (canonical_form(child, cv).key != canonical_form(child, cw).key) continue;
    }
    // only accepted children are deduplicated: a rejected sibling may be isomorphic to an accepted one
    seen.insert(form.key);
    extend(form.graph, target, fn);
  }
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 10) throw std::domain_error("for_each_graph supports 0 <= n <= 10");
  if (n == 0) {
    fn(Graph(0));
    return;
  }
  extend(Graph(1), n, fn);
}

std::vector<Graph> generate_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cliquemin
