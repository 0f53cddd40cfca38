#include "tinter/report.hpp"

#include <sstream>

namespace tinter {

std::string to_decimal(const ExactCount& c) { return c.str(); }

std::string to_decimal(const ExactRatio& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::ordered_json hypotheses_json(const HypothesisFlags& flags) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (flags.ratio_bound) j["thm1.1"] = *flags.ratio_bound;
  if (flags.product_bound) j["thm1.2"] = *flags.product_bound;
  if (flags.union_bound) j["thm1.3"] = *flags.union_bound;
  return j;
}

nlohmann::ordered_json distributions_json(const std::vector<TDistribution>& dists) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& d : dists) arr.push_back(d.entries);
  return arr;
}

nlohmann::ordered_json bound_json(const BoundReport& report) {
  return {{"optimal_distributions", distributions_json(report.optimal_distributions)},
          {"value", to_decimal(report.value)},
          {"hypotheses", hypotheses_json(report.hypotheses)}};
}

nlohmann::ordered_json search_json(const SearchResult& result, const std::optional<std::string>& witness_path) {
  nlohmann::ordered_json j{{"max_size", to_decimal(result.max_size)},
                   {"nodes_explored", result.nodes_explored},
                   {"initial_lower_bound", to_decimal(result.bound_used)},
                   {"proven_optimal", result.proven_optimal},
                   {"witness_is_trivial_star", result.is_trivial_star.has_value()}};
  if (result.is_trivial_star) j["star_center"] = result.is_trivial_star->elements();
  if (witness_path) j["witness_file"] = *witness_path;
  return j;
}

nlohmann::ordered_json conjecture_json(const ConjectureReport& report, const std::optional<std::string>& witness_path) {
  nlohmann::ordered_json j = search_json(report.search, witness_path);
  j["best_star_size"] = std::to_string(report.best_star.size());
  if (report.best_star_center) j["best_star_center"] = *report.best_star_center;
  j["hypotheses"] = {{"n_i>=2a_i", report.hypothesis_half}, {"n_i>k-sum_a+a_i", report.hypothesis_size}};
  j["verdict"] = to_string(report.verdict);
  return j;
}

nlohmann::ordered_json theorem_json(const TheoremReport& report, const std::optional<std::string>& witness_path) {
  nlohmann::ordered_json j = search_json(report.search, witness_path);
  j["g"] = to_decimal(report.g);
  j["optimal_distributions"] = distributions_json(report.optimal_distributions);
  j["hypotheses"] = hypotheses_json(report.hypotheses);
  j["max_equals_g"] = report.equality;
  j["gap"] = to_decimal(report.gap);
  j["center_satisfies_es2"] = report.center_satisfies_es2;
  return j;
}

std::string json_as_table(const nlohmann::ordered_json& j) {
  std::ostringstream os;
  if (!j.is_object()) {
    os << j.dump() << '\n';
    return os.str();
  }
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << it.key() << std::string(width - it.key().size(), ' ') << "  ";
    os << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
  return os.str();
}

}  // namespace tinter
