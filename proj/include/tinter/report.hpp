#pragma once

// JSON views of the result types. Counts are decimal strings so that
// arbitrary-precision values survive any JSON reader.

#include <optional>
#include <string>

#include "json.hpp"
#include "tinter/bounds.hpp"
#include "tinter/search.hpp"

namespace tinter {

std::string to_decimal(const ExactCount& c);
std::string to_decimal(const ExactRatio& r);  // "p/q", or "p" when q = 1

nlohmann::ordered_json hypotheses_json(const HypothesisFlags& flags);
nlohmann::ordered_json distributions_json(const std::vector<TDistribution>& dists);
nlohmann::ordered_json bound_json(const BoundReport& report);
nlohmann::ordered_json search_json(const SearchResult& result, const std::optional<std::string>& witness_path = {});
nlohmann::ordered_json conjecture_json(const ConjectureReport& report, const std::optional<std::string>& witness_path = {});
nlohmann::ordered_json theorem_json(const TheoremReport& report, const std::optional<std::string>& witness_path = {});

/// Key/value lines for humans: one "key: value" row per top-level key.
std::string json_as_table(const nlohmann::ordered_json& j);

}  // namespace tinter
