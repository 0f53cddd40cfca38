#pragma once

// The acceptance battery: exact desk-scale reproductions plus randomized and
// exhaustive property sweeps. Shared by the acceptance test binary and the
// `repro` subcommand.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tinter {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 means none
};

struct AcceptanceCriterion {
  int id;
  std::string name;
  double time_limit;
  std::function<CriterionResult()> run;
};

std::vector<AcceptanceCriterion> acceptance_criteria();

/// Runs every criterion (or only `only` when non-empty), printing one line per
/// criterion as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only = {});

}  // namespace tinter
