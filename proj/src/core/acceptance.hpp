#pragma once

#include <string>
#include <vector>

#include "invariants.hpp"

namespace connmod {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

inline constexpr int kCriterionCount = 12;

// Runs one criterion (1..12) with fixed seeds. Exceptions are reported as failures.
CriterionResult run_criterion(int id, int cap = kDefaultContractionCap);
std::vector<CriterionResult> run_acceptance(int cap = kDefaultContractionCap);

} // namespace connmod
