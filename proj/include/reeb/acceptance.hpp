#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reeb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

/// Runs acceptance criteria 1 to 9 with a fixed seed for the random inputs.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3  name  (0.012 s / 1 s)  detail"
std::string format_line(const CriterionResult& result);

}  // namespace reeb
