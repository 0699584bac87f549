// Command-line front end: scallop curves, constructions, oracle tables and certificates.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cliquemin/canonical.hpp"
#include "cliquemin/diagnostics.hpp"
#include "cliquemin/distance.hpp"
#include "cliquemin/family.hpp"
#include "cliquemin/graph.hpp"
#include "cliquemin/oracle.hpp"
#include "cliquemin/scallop.hpp"
#include "cliquemin/stepgraphon.hpp"

using namespace cliquemin;

namespace {

constexpr int exit_usage = 64;
constexpr int exit_domain = 3;
constexpr int exit_cert_fail = 2;

// Thrown for flag values that parse but are not acceptable (exit 64).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string exact_and_decimal(const Surd& x) { return to_string(x) + " (" + to_decimal(x) + ")"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "graph6") out << to_graph6(g) << '\n';
  else write_edge_list(out, g);
}

std::string default_cache_path() {
  if (const char* dir = std::getenv("CLIQUEMIN_CACHE_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / "oracle-cache.jsonl").string();
  return {};
}

struct Options {
  int r = 3;
  std::string alpha = "";
  std::string from = "0", to = "119/120", step = "1/120";
  std::string out;
  int n = 0;
  long m = -1;
  std::string format = "graph6";
  std::string graph_file, graphon_file, a_file, b_file;
  bool all_m = false;
  std::string cache;
  int jobs = 1;
  std::string mode = "edit";
  bool exact = false;
  std::uint64_t seed = 1;
  int restarts = 8;
  bool local_search = false;
};

int cmd_eval(const Options& o) {
  const Rational alpha = flag_rational(o.alpha, "--alpha");
  std::cout << "alpha=" << alpha.to_string() << '\n';
  if (alpha == Rational(1)) {
    std::cout << "k=undefined\nh=" << exact_and_decimal(h_r(o.r, alpha)) << '\n';
    return 0;
  }
  const int k = k_of_alpha(alpha);
  std::cout << "k=" << k << '\n';
  std::cout << "c=" << exact_and_decimal(c_of_alpha(alpha)) << '\n';
  std::cout << "h=" << exact_and_decimal(h_r(o.r, alpha)) << '\n';
  if (alpha.sign() > 0 && o.r >= 2) {
    std::cout << "h_prime_right=" << exact_and_decimal(h_r_prime(o.r, alpha, Side::right)) << '\n';
    std::cout << "h_prime_left=" << exact_and_decimal(h_r_prime(o.r, alpha, Side::left)) << '\n';
  }
  std::cout << "cusp=" << (is_cusp(alpha) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_sweep(const Options& o) {
  const Rational from = flag_rational(o.from, "--from"), to = flag_rational(o.to, "--to"),
                 step = flag_rational(o.step, "--step");
  if (step.sign() <= 0) throw UsageError("--step must be positive");
  if (from.sign() < 0 || to >= Rational(1)) throw std::domain_error("sweep range must lie in [0, 1)");
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  write_csv_row(out, {"alpha", "k", "c_decimal", "h_r_decimal", "h_r_prime_decimal", "exact_h_r"});
  for (Rational a = from; a <= to; a = a + step) {
    const Surd h = h_r(o.r, a);
    const std::string prime = a.sign() > 0 ? to_decimal(h_r_prime(o.r, a, Side::right)) : "";
    write_csv_row(out, {a.to_string(), std::to_string(k_of_alpha(a)), to_decimal(c_of_alpha(a)), to_decimal(h), prime,
                        to_surd_string(h)});
  }
  return 0;
}

int cmd_construct_graph(const Options& o) {
  FamilyGraph f;
  if (o.m >= 0) {
    f = family_minimum_H(o.n, o.m, o.r).witness;
  } else {
    f = construct_H_alpha_n(flag_rational(o.alpha, "--alpha"), o.n);
  }
  if (o.format == "json") std::cout << to_json(f).dump() << '\n';
  else write_graph(std::cout, f.graph, o.format);
  std::cerr << "edges=" << f.graph.size() << " K_" << o.r << "=" << count_cliques(f.graph, o.r) << '\n';
  return 0;
}

int cmd_construct_graphon(const Options& o) {
  const ExtremalGraphon e = construct_extremal(o.r, flag_rational(o.alpha, "--alpha"));
  if (o.out.empty()) std::cout << to_json(e.base).dump(2) << '\n';
  else write_graphon_file(o.out, e.base);
  std::cerr << "k=" << e.k << " c=" << to_string(e.c) << " t(K_2)=" << to_string(clique_density(e.base, 2))
            << " t(K_" << o.r << ")=" << to_string(clique_density(e.base, o.r)) << '\n';
  return 0;
}

int cmd_hom(const Options& o) {
  if (o.graph_file.empty() == o.graphon_file.empty()) throw UsageError("hom needs exactly one of --graph, --graphon");
  if (!o.graph_file.empty()) {
    const Graph g = read_graph_file(o.graph_file);
    const Rational t = hom_density(g, o.r);
    std::cout << "n=" << g.order() << "\nm=" << g.size() << "\ncliques=" << count_cliques(g, o.r)
              << "\nt=" << t.to_string() << " (" << to_decimal(t) << ")\n";
    return 0;
  }
  const Graphon w = read_graphon_file(o.graphon_file);
  std::cout << "t=" << exact_and_decimal(clique_density(w, o.r)) << '\n';
  return 0;
}

int cmd_oracle(const Options& o) {
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  std::vector<OracleRecord> rows;
  if (o.local_search) {
    if (o.m < 0) throw UsageError("--local-search needs --m");
    rows.push_back(local_search_upper(o.n, o.m, o.r, o.seed, o.restarts));
  } else if (o.all_m || o.m < 0) {
    const std::string path = o.cache.empty() ? default_cache_path() : o.cache;
    std::unique_ptr<OracleCache> cache;
    if (!path.empty()) cache = std::make_unique<OracleCache>(path);
    rows = exact_table_cached(o.n, o.r, o.jobs, cache.get());
  } else {
    rows.push_back(exact_min(o.n, o.m, o.r));
  }
  write_csv_row(std::cout, {"n", "m", "r", "g_min", "h_min", "gap_decimal", "witness_g6"});
  for (const auto& rec : rows)
    write_csv_row(std::cout, {std::to_string(rec.n), std::to_string(rec.m), std::to_string(rec.r),
                              std::to_string(rec.g_min), std::to_string(rec.h_min), to_decimal(asymptotic_gap(rec)),
                              rec.witness_g});
  return 0;
}

int cmd_certify(const Options& o) {
  const Graphon w = read_graphon_file(o.graphon_file);
  const Surd alpha = clique_density(w, 2);
  if (sign(Surd(1) - alpha) > 0 && is_cusp(alpha)) {
    int t = 0;
    const bool turan = is_turan_graphon(w, &t);
    std::cerr << "edge density " << to_string(alpha) << " is a cusp; Turan structure test: "
              << (turan ? "W_{K_" + std::to_string(t) + "}" : std::string("not a Turan graphon")) << '\n';
    return exit_domain;
  }
  const Certificate cert = certify(w, o.r);
  std::cout << to_json(cert).dump(2) << '\n';
  return cert.pass ? 0 : exit_cert_fail;
}

int cmd_distance(const Options& o) {
  const SearchMode mode = o.exact ? SearchMode::exact : SearchMode::heuristic;
  const Graph a = read_graph_file(o.a_file);
  if (o.mode == "family") {
    const FamilyDistance d = distance_to_family(a, o.r, mode);
    std::cout << "distance=" << d.distance << "\nwitness=" << to_json(d.witness).dump() << '\n';
    return 0;
  }
  if (o.b_file.empty()) throw UsageError("--b is required for edit and cut distances");
  const Graph b = read_graph_file(o.b_file);
  if (o.mode == "edit") {
    std::cout << "edit=" << edit_distance(a, b, mode) << '\n';
  } else {
    const Rational d = cut_discrepancy(a, b, mode, o.seed);
    std::cout << "cut=" << d.to_string() << " (" << to_decimal(d) << ")\n";
  }
  return 0;
}

int cmd_sample(const Options& o) {
  const Graphon w = read_graphon_file(o.graphon_file);
  write_graph(std::cout, sample_w_random(w, o.n, o.seed), o.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  {
    std::ostringstream line;
    for (int i = 0; i < argc; ++i) line << (i ? " " : "") << argv[i];
    std::cerr << "# " << line.str() << '\n';
  }

  CLI::App app{"Exact clique-density minimisation: the scallop curve h_r, extremal constructions, oracles"};
  app.require_subcommand(1);
  Options o;
  auto alpha_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", o.alpha, "edge density as p/q");
    if (required) opt->required();
  };
  auto r_opt = [&](CLI::App* sub, int lo) {
    sub->add_option("--r", o.r, "clique order r")->required()->check(CLI::Range(lo, 64));
  };
  const auto formats = CLI::IsMember({"graph6", "edges"});

  auto* eval = app.add_subcommand("eval", "k(alpha), c(alpha), h_r(alpha) and the one-sided h_r'(alpha)");
  r_opt(eval, 2);
  alpha_opt(eval, true);

  auto* sweep = app.add_subcommand("sweep", "CSV of h_r and h_r' along a rational grid of edge densities");
  r_opt(sweep, 2);
  sweep->add_option("--from", o.from, "first alpha");
  sweep->add_option("--to", o.to, "last alpha (< 1)");
  sweep->add_option("--step", o.step, "grid step");
  sweep->add_option("--out", o.out, "output CSV file (default stdout)");

  auto* cgraph = app.add_subcommand(
      "construct-graph", "H_{alpha,n}, or with --m the family member attaining H_r(n,m) (fewest K_r)");
  r_opt(cgraph, 2);
  alpha_opt(cgraph, false);
  cgraph->add_option("--n", o.n, "vertices")->required()->check(CLI::Range(1, 64));
  cgraph->add_option("--m", o.m, "edges; selects the H_r(n,m) optimum");
  cgraph->add_option("--format", o.format, "graph6 | edges | json")->check(CLI::IsMember({"graph6", "edges", "json"}));

  auto* cgraphon = app.add_subcommand("construct-graphon",
                                      "extremal step graphon at (r, alpha): k-1 parts of measure c plus a bipartite block");
  r_opt(cgraphon, 3);
  alpha_opt(cgraphon, true);
  cgraphon->add_option("--out", o.out, "graphon JSON file (default stdout)");

  auto* hom = app.add_subcommand("hom", "homomorphism density t(K_r, W) of a graph or step graphon");
  r_opt(hom, 1);
  hom->add_option("--graph", o.graph_file, "graph file (graph6 or edge list)");
  hom->add_option("--graphon", o.graphon_file, "graphon JSON file");

  auto* oracle = app.add_subcommand("oracle", "exact G_r(n,m) by exhaustive search beside H_r(n,m) and the gap to h_r");
  oracle->add_option("--n", o.n, "vertices")->required()->check(CLI::Range(1, 64));
  r_opt(oracle, 2);
  oracle->add_option("--m", o.m, "single edge count");
  oracle->add_flag("--all-m", o.all_m, "every m in 0..C(n,2)");
  oracle->add_option("--cache", o.cache, "JSON-lines cache (default $CLIQUEMIN_CACHE_DIR/oracle-cache.jsonl)");
  oracle->add_option("--jobs", o.jobs, "worker threads");
  oracle->add_flag("--local-search", o.local_search, "upper bound by seeded edge-move descent");
  oracle->add_option("--seed", o.seed, "RNG seed for --local-search");
  oracle->add_option("--restarts", o.restarts, "restarts for --local-search");

  auto* cert = app.add_subcommand(
      "certify", "necessary extremality conditions: f_r = 0, no K_r-heavy pairs, degree <= kc, neighbourhood bound");
  cert->add_option("--graphon", o.graphon_file, "graphon JSON file")->required();
  r_opt(cert, 3);

  auto* dist = app.add_subcommand("distance", "edit distance, cut discrepancy, or edit distance to the family");
  dist->add_option("--mode", o.mode, "edit | cut | family")->check(CLI::IsMember({"edit", "cut", "family"}));
  dist->add_option("--a", o.a_file, "first graph file")->required();
  dist->add_option("--b", o.b_file, "second graph file");
  dist->add_flag("--exact", o.exact, "exact search (edit n <= 9, cut n <= 24)");
  dist->add_option("--r", o.r, "clique order for --mode family");
  dist->add_option("--seed", o.seed, "RNG seed for the sampled cut heuristic");

  auto* sample = app.add_subcommand("sample", "n-vertex W-random graph sampled from a step graphon");
  sample->add_option("--graphon", o.graphon_file, "graphon JSON file")->required();
  sample->add_option("--n", o.n, "vertices")->required()->check(CLI::Range(0, 64));
  sample->add_option("--seed", o.seed, "RNG seed")->required();
  sample->add_option("--format", o.format, "graph6 | edges")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*sweep) return cmd_sweep(o);
    if (*cgraph) {
      if (o.m < 0 && o.alpha.empty()) throw UsageError("construct-graph needs --alpha or --m");
      return cmd_construct_graph(o);
    }
    if (*cgraphon) return cmd_construct_graphon(o);
    if (*hom) return cmd_hom(o);
    if (*oracle) return cmd_oracle(o);
    if (*cert) return cmd_certify(o);
    if (*dist) return cmd_distance(o);
    if (*sample) return cmd_sample(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_usage;
}
