#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "cliquemin/quadratic.hpp"

namespace cliquemin {

enum class OracleMethod { labeled_exhaustive, canonical, local_search_upper_bound };

std::string to_string(OracleMethod m);
OracleMethod parse_oracle_method(const std::string& s);

/// G_r(n, m) (exact or an upper bound, per `method`) next to the family optimum H_r(n, m).
struct OracleRecord {
  int n = 0;
  long m = 0;
  int r = 3;
  std::uint64_t g_min = 0;
  std::uint64_t h_min = 0;
  std::string witness_g;  // graph6
  std::string witness_h;  // graph6
  OracleMethod method = OracleMethod::labeled_exhaustive;
};

nlohmann::json to_json(const OracleRecord& rec);
OracleRecord oracle_record_from_json(const nlohmann::json& j);

/// Exhaustive G_r(n, m) for n <= 8.  n <= 7 enumerates labeled m-edge sets
/// containing the edge (n-2, n-1); n = 8 runs over isomorphism classes.  The
/// witness is the least graph6 string among the optimal graphs visited.
OracleRecord exact_min(int n, long m, int r);

/// Records for every m in 0..C(n,2), from one Gray-code pass over labeled
/// graphs (n <= 7) or the isomorphism classes (n = 8).  `jobs` splits the pass
/// into contiguous shards; the merge is order-independent.
std::vector<OracleRecord> exact_table(int n, int r, int jobs = 1);

/// JSON-lines cache keyed by (n, m, r, method).  Appends are idempotent.
class OracleCache {
 public:
  explicit OracleCache(std::string path);
  const std::string& path() const { return path_; }
  std::optional<OracleRecord> find(int n, long m, int r, OracleMethod method) const;
  void store(const OracleRecord& rec);

 private:
  std::string path_;
  std::map<std::tuple<int, long, int, int>, OracleRecord> records_;
};

/// exact_table backed by the cache: only missing rows are computed.
std::vector<OracleRecord> exact_table_cached(int n, int r, int jobs, OracleCache* cache);

/// G_3(n, t_2(n) + q) >= q floor(n/2) for 1 <= q < floor(n/2).
bool erdos_bound_check(int n);

/// r! g_min / n^r - h_r(2m / n^2).
Surd asymptotic_gap(const OracleRecord& rec);
Surd asymptotic_gap(int n, long m, int r);

/// Seeded edge-move descent on m-edge graphs; the first restart starts from
/// the family optimum (n <= 40).  The result is an upper bound on G_r(n, m).
OracleRecord local_search_upper(int n, long m, int r, std::uint64_t seed, int restarts);

}  // namespace cliquemin
