#pragma once

#include <string>
#include <vector>

namespace qmf::acceptance {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> failures;  // one line per failed check
  std::vector<std::string> notes;     // context that does not affect the verdict
  double seconds = 0;
};

constexpr int kCriteria = 10;

CriterionResult run_criterion(int number);  // throws InvalidInput outside 1..10
std::vector<CriterionResult> run_all();

// "PASS  3  Golden expansions (0.4 s)" plus " -- first failure" when failing.
std::string summary_line(const CriterionResult& r);

}  // namespace qmf::acceptance
