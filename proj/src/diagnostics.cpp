#include "cliquemin/diagnostics.hpp"

namespace cliquemin {

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : cert.per_part)
    parts.push_back({{"part", p.part},
                     {"measure", to_json(p.measure)},
                     {"degree", to_json(p.degree)},
                     {"f_r", to_json(p.f_r)},
                     {"f_3", to_json(p.f_3)},
                     {"degree_excess", to_json(p.degree_excess)}});
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& h : cert.heavy_pairs) pairs.push_back({{"parts", {h.x, h.y}}, {"excess", to_json(h.excess)}});
  nlohmann::json nbhd = nlohmann::json::array();
  for (const auto& s : cert.neighbourhood_checks)
    nbhd.push_back({{"part", s.part},
                    {"tau", to_json(s.tau)},
                    {"rho", to_json(s.rho)},
                    {"rho_bounded", s.rho_bounded},
                    {"edge_density", to_json(s.edge_density)},
                    {"clique_density", to_json(s.clique_density)},
                    {"h_lower", to_json(s.h_lower)},
                    {"p_at_rho", to_json(s.p_at_rho)},
                    {"lower_bound_holds", s.lower_bound_holds},
                    {"required", s.required},
                    {"pattern", s.pattern}});
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : cert.violations)
    violations.push_back({{"condition", v.condition}, {"parts", v.parts}, {"margin", to_json(v.margin)}});
  return {{"r", cert.r},
          {"alpha", to_json(cert.alpha)},
          {"k", cert.k},
          {"c", to_json(cert.c)},
          {"clique_gap", to_json(cert.clique_gap)},
          {"per_part", std::move(parts)},
          {"heavy_pairs", std::move(pairs)},
          {"neighbourhood_checks", std::move(nbhd)},
          {"violations", std::move(violations)},
          {"verdict", cert.pass ? "pass" : "fail"}};
}

}  // namespace cliquemin
