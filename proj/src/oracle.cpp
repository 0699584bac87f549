#include "cliquemin/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "cliquemin/canonical.hpp"
#include "cliquemin/family.hpp"
#include "cliquemin/graph.hpp"
#include "cliquemin/scallop.hpp"

namespace cliquemin {

std::string to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::labeled_exhaustive: return "labeled-exhaustive";
    case OracleMethod::canonical: return "canonical";
    case OracleMethod::local_search_upper_bound: return "local-search-upper-bound";
  }
  return "?";
}

OracleMethod parse_oracle_method(const std::string& s) {
  if (s == "labeled-exhaustive") return OracleMethod::labeled_exhaustive;
  if (s == "canonical") return OracleMethod::canonical;
  if (s == "local-search-upper-bound") return OracleMethod::local_search_upper_bound;
  throw std::invalid_argument("unknown oracle method: " + s);
}

nlohmann::json to_json(const OracleRecord& rec) {
  return {{"n", rec.n},           {"m", rec.m},
          {"r", rec.r},           {"g_min", rec.g_min},
          {"h_min", rec.h_min},   {"witness_g", rec.witness_g},
          {"witness_h", rec.witness_h}, {"method", to_string(rec.method)}};
}

OracleRecord oracle_record_from_json(const nlohmann::json& j) {
  OracleRecord rec;
  rec.n = j.at("n").get<int>();
  rec.m = j.at("m").get<long>();
  rec.r = j.at("r").get<int>();
  rec.g_min = j.at("g_min").get<std::uint64_t>();
  rec.h_min = j.at("h_min").get<std::uint64_t>();
  rec.witness_g = j.at("witness_g").get<std::string>();
  rec.witness_h = j.at("witness_h").get<std::string>();
  rec.method = parse_oracle_method(j.at("method").get<std::string>());
  return rec;
}

namespace {

long pairs(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void check_range(int n, long m, int r) {
  if (n < 1) throw std::domain_error("oracle needs n >= 1");
  if (m < 0 || m > pairs(n)) throw std::domain_error("oracle: m out of range");
  if (r < 2) throw std::domain_error("oracle needs r >= 2");
}

OracleRecord finish(int n, long m, int r, std::uint64_t g_min, const Graph& witness, OracleMethod method) {
  OracleRecord rec;
  rec.n = n;
  rec.m = m;
  rec.r = r;
  rec.g_min = g_min;
  rec.witness_g = to_graph6(witness);
  rec.method = method;
  if (n <= 40) {
    const FamilyOptimum h = family_minimum_H(n, m, r);
    rec.h_min = h.count.get_ui();
    rec.witness_h = to_graph6(h.witness.graph);
  }
  return rec;
}

// Labeled graphs on n <= 7 vertices as masks over the graph6 edge order.  The
// last edge, (n-2, n-1), is always present, so masks range over the other E-1.
struct Labeled {
  int n;
  std::vector<std::pair<int, int>> edges;
  int free_bits;

  explicit Labeled(int n_) : n(n_), edges(graph6_edge_order(n_)), free_bits(static_cast<int>(edges.size()) - 1) {}

  Graph graph(std::uint64_t mask) const {
    Graph g(n);
    for (int i = 0; i < free_bits; ++i)
      if ((mask >> i) & 1U) g.add_edge(edges[static_cast<std::size_t>(i)].first, edges[static_cast<std::size_t>(i)].second);
    g.add_edge(edges.back().first, edges.back().second);
    return g;
  }

  // graph6 strings of equal order compare like this integer: edge 0 is the leading bit
  std::uint64_t key(std::uint64_t mask) const {
    const int e = free_bits + 1;
    std::uint64_t k = 1;  // fixed last edge
    for (int i = 0; i < free_bits; ++i)
      if ((mask >> i) & 1U) k |= std::uint64_t{1} << (e - 1 - i);
    return k;
  }
};

struct Best {
  bool set = false;
  std::uint64_t count = 0;
  std::uint64_t key = 0;
  std::uint64_t mask = 0;

  void offer(std::uint64_t c, std::uint64_t k, std::uint64_t m) {
    if (!set || c < count || (c == count && k < key)) {
      set = true;
      count = c;
      key = k;
      mask = m;
    }
  }
  void merge(const Best& o) {
    if (o.set) offer(o.count, o.key, o.mask);
  }
};

const std::vector<Graph>& classes_on_8() {
  static std::once_flag once;
  static std::vector<Graph> graphs;
  std::call_once(once, [] { graphs = generate_graphs(8); });
  return graphs;
}

std::vector<OracleRecord> canonical_table(int n, int r, long only_m) {
  std::vector<std::uint64_t> best(static_cast<std::size_t>(pairs(n) + 1), UINT64_MAX);
  std::vector<std::string> witness(best.size());
  std::vector<const Graph*> wg(best.size(), nullptr);
  for (const Graph& g : classes_on_8()) {
    if (only_m >= 0 && g.size() != only_m) continue;
    const auto m = static_cast<std::size_t>(g.size());
    const std::uint64_t c = count_cliques(g, r);
    std::string g6 = to_graph6(g);
    if (c < best[m] || (c == best[m] && g6 < witness[m])) {
      best[m] = c;
      witness[m] = std::move(g6);
      wg[m] = &g;
    }
  }
  std::vector<OracleRecord> out;
  for (long m = 0; m <= pairs(n); ++m) {
    if (only_m >= 0 && m != only_m) continue;
    out.push_back(finish(n, m, r, best[static_cast<std::size_t>(m)], *wg[static_cast<std::size_t>(m)],
                         OracleMethod::canonical));
  }
  return out;
}

std::vector<Best> gray_shard(const Labeled& lab, int r, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Best> best(static_cast<std::size_t>(lab.free_bits + 2));
  std::uint64_t mask = lo ^ (lo >> 1);
  Graph g = lab.graph(mask);
  std::uint64_t count = count_cliques(g, r);
  best[static_cast<std::size_t>(g.size())].offer(count, lab.key(mask), mask);
  for (std::uint64_t i = lo + 1; i < hi; ++i) {
    const int b = std::countr_zero(i);
    const auto [u, v] = lab.edges[static_cast<std::size_t>(b)];
    const VertexSet common = g.neighbours(u) & g.neighbours(v);
    const std::uint64_t delta = r == 2 ? 1 : count_cliques_in(g, common, r - 2);
    if ((mask >> b) & 1U) {
      g.remove_edge(u, v);
      count -= delta;
    } else {
      g.add_edge(u, v);
      count += delta;
    }
    mask ^= std::uint64_t{1} << b;
    best[static_cast<std::size_t>(g.size())].offer(count, lab.key(mask), mask);
  }
  return best;
}

}  // namespace

OracleRecord exact_min(int n, long m, int r) {
  check_range(n, m, r);
  if (n > 8) throw std::domain_error("exact_min supports n <= 8");
  if (n == 8) return canonical_table(n, r, m).front();
  if (m == 0) return finish(n, m, r, 0, Graph(n), OracleMethod::labeled_exhaustive);
  const Labeled lab(n);
  Best best;
  // Gosper's hack over (m-1)-subsets of the free edges
  const int k = static_cast<int>(m - 1);
  const std::uint64_t limit = std::uint64_t{1} << lab.free_bits;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    best.offer(count_cliques(lab.graph(mask), r), lab.key(mask), mask);
    if (mask == 0) break;
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t rr = mask + c;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  return finish(n, m, r, best.count, lab.graph(best.mask), OracleMethod::labeled_exhaustive);
}

std::vector<OracleRecord> exact_table(int n, int r, int jobs) {
  check_range(n, 0, r);
  if (n > 8) throw std::domain_error("exact_table supports n <= 8");
  if (n == 8) return canonical_table(n, r, -1);
  std::vector<OracleRecord> out;
  out.push_back(finish(n, 0, r, 0, Graph(n), OracleMethod::labeled_exhaustive));
  if (n < 2) return out;

  const Labeled lab(n);
  const std::uint64_t total = std::uint64_t{1} << lab.free_bits;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::vector<Best>> shards(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(j + 1) / static_cast<std::uint64_t>(jobs);
    auto work = [&, j, lo, hi] { shards[static_cast<std::size_t>(j)] = gray_shard(lab, r, lo, hi); };
    if (jobs == 1) work();
    else workers.emplace_back(work);
  }
  for (auto& t : workers) t.join();
  std::vector<Best> merged(static_cast<std::size_t>(lab.free_bits + 2));
  for (const auto& shard : shards)
    for (std::size_t m = 0; m < merged.size(); ++m) merged[m].merge(shard[m]);
  for (long m = 1; m <= pairs(n); ++m) {
    const Best& b = merged[static_cast<std::size_t>(m)];
    out.push_back(finish(n, m, r, b.count, lab.graph(b.mask), OracleMethod::labeled_exhaustive));
  }
  return out;
}

OracleCache::OracleCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const OracleRecord rec = oracle_record_from_json(nlohmann::json::parse(line));
    records_[{rec.n, rec.m, rec.r, static_cast<int>(rec.method)}] = rec;
  }
}

std::optional<OracleRecord> OracleCache::find(int n, long m, int r, OracleMethod method) const {
  auto it = records_.find({n, m, r, static_cast<int>(method)});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void OracleCache::store(const OracleRecord& rec) {
  const auto key = std::make_tuple(rec.n, rec.m, rec.r, static_cast<int>(rec.method));
  if (records_.count(key)) return;
  records_[key] = rec;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path_);
  out << to_json(rec).dump() << '\n';
}

std::vector<OracleRecord> exact_table_cached(int n, int r, int jobs, OracleCache* cache) {
  if (!cache) return exact_table(n, r, jobs);
  const OracleMethod method = n == 8 ? OracleMethod::canonical : OracleMethod::labeled_exhaustive;
  std::vector<OracleRecord> out;
  for (long m = 0; m <= pairs(n); ++m) {
    auto hit = cache->find(n, m, r, method);
    if (!hit) {
      out = exact_table(n, r, jobs);
      for (const auto& rec : out) cache->store(rec);
      return out;
    }
    out.push_back(*hit);
  }
  return out;
}

bool erdos_bound_check(int n) {
  if (n < 1 || n > 8) throw std::domain_error("erdos_bound_check supports n <= 8");
  const long half = n / 2;
  const auto table = exact_table(n, 3);
  const long base = static_cast<long>(turan_edges(2, n));
  for (long q = 1; q < half; ++q) {
    if (base + q > pairs(n)) break;
    if (table[static_cast<std::size_t>(base + q)].g_min < static_cast<std::uint64_t>(q * half)) return false;
  }
  return true;
}

Surd asymptotic_gap(const OracleRecord& rec) {
  mpz_class nr;
  mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(rec.n), static_cast<unsigned long>(rec.r));
  const Rational density(mpz_class(factorial(rec.r) * mpz_class(static_cast<unsigned long>(rec.g_min))), nr);
  const Rational alpha(2 * rec.m, static_cast<long>(rec.n) * rec.n);
  return Surd(density) - h_r(rec.r, alpha);
}

Surd asymptotic_gap(int n, long m, int r) { return asymptotic_gap(exact_min(n, m, r)); }

OracleRecord local_search_upper(int n, long m, int r, std::uint64_t seed, int restarts) {
  check_range(n, m, r);
  if (n > Graph::max_order) throw std::domain_error("local_search_upper supports n <= 64");
  if (restarts < 1) throw std::domain_error("local_search_upper needs restarts >= 1");
  std::mt19937_64 rng(seed);
  const auto all_pairs = graph6_edge_order(n);

  auto random_graph = [&] {
    std::vector<std::size_t> idx(all_pairs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
    Graph g(n);
    for (long e = 0; e < m; ++e) g.add_edge(all_pairs[idx[static_cast<std::size_t>(e)]].first, all_pairs[idx[static_cast<std::size_t>(e)]].second);
    return g;
  };
  auto through = [&](const Graph& g, int u, int v) -> std::uint64_t {
    return r == 2 ? 1 : count_cliques_in(g, g.neighbours(u) & g.neighbours(v), r - 2);
  };

  bool have = false;
  std::uint64_t best_count = 0;
  Graph best;
  for (int run = 0; run < restarts; ++run) {
    Graph g = run == 0 && n <= 40 ? family_minimum_H(n, m, r).witness.graph : random_graph();
    std::uint64_t count = count_cliques(g, r);
    for (bool improved = true; improved;) {
      improved = false;
      std::vector<std::pair<std::uint64_t, std::size_t>> present, absent;
      for (std::size_t i = 0; i < all_pairs.size(); ++i) {
        const auto [u, v] = all_pairs[i];
        (g.has_edge(u, v) ? present : absent).emplace_back(through(g, u, v), i);
      }
      std::sort(present.begin(), present.end(), [](auto& a, auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
      std::sort(absent.begin(), absent.end());
      for (const auto& [ce, ei] : present) {
        if (ce == 0) break;
        for (const auto& [af, fi] : absent) {
          if (af >= ce) break;
          const auto [eu, ev] = all_pairs[ei];
          const auto [fu, fv] = all_pairs[fi];
          g.remove_edge(eu, ev);
          const std::uint64_t gain = through(g, fu, fv);
          if (gain < ce) {
            g.add_edge(fu, fv);
            count = count - ce + gain;
            improved = true;
            break;
          }
          g.add_edge(eu, ev);
        }
        if (improved) break;
      }
    }
    if (!have || count < best_count || (count == best_count && to_graph6(g) < to_graph6(best))) {
      have = true;
      best_count = count;
      best = g;
    }
  }
  return finish(n, m, r, best_count, best, OracleMethod::local_search_upper_bound);
}

}  // namespace cliquemin
