#pragma once

#include <string>
#include <vector>

namespace mlcif {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first failure, or a short summary of the sweep
  double millis = 0;
};

struct SelftestOptions {
  unsigned seed = 1;           // for the sampled suites
  int max_k = 4;               // catalog-based suites run for k <= max_k
  double time_budget_sec = 0;  // 0 = unlimited; checked between suites
};

/// Run the full invariant suite at desk scale. Throws resource_error when the
/// time budget is exhausted before all suites finished.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opt = {});

}  // namespace mlcif
