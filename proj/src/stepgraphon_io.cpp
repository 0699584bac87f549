#include <fstream>

#include "cliquemin/stepgraphon.hpp"

namespace cliquemin {

namespace {

Surd parse_entry(const nlohmann::json& j) {
  if (j.is_string()) return parse_surd(j.get<std::string>());
  if (j.is_number_integer()) return Surd(Rational(j.get<long>()));
  throw std::invalid_argument("graphon json: entries must be strings \"p/q\" or integers");
}

}  // namespace

nlohmann::json to_json(const Graphon& w) {
  nlohmann::json parts = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  for (int i = 0; i < w.parts(); ++i) {
    parts.push_back({{"measure", to_surd_string(w.measure(i))}});
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < w.parts(); ++j) row.push_back(to_surd_string(w.value(i, j)));
    values.push_back(std::move(row));
  }
  return {{"parts", std::move(parts)}, {"values", std::move(values)}};
}

Graphon graphon_from_json(const nlohmann::json& j) {
  const auto& parts = j.at("parts");
  const auto& values = j.at("values");
  const auto p = static_cast<Eigen::Index>(parts.size());
  if (static_cast<Eigen::Index>(values.size()) != p) throw std::invalid_argument("graphon json: values must be square");
  Graphon::Vector mu(p);
  Graphon::Matrix vals(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    mu(i) = parse_entry(parts.at(static_cast<std::size_t>(i)).at("measure"));
    const auto& row = values.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != p) throw std::invalid_argument("graphon json: values must be square");
    for (Eigen::Index k = 0; k < p; ++k) vals(i, k) = parse_entry(row.at(static_cast<std::size_t>(k)));
  }
  return Graphon(std::move(mu), std::move(vals));
}

Graphon read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return graphon_from_json(nlohmann::json::parse(in));
}

void write_graphon_file(const std::string& path, const Graphon& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(w).dump(2) << '\n';
}

}  // namespace cliquemin
