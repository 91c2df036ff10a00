#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slzeta::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

/// Runs criteria 1..8 in order. A criterion passes only if its checks hold
/// and it finishes inside its time limit.
std::vector<CriterionResult> run_acceptance();

/// Runs a single criterion; ids outside 1..8 throw std::out_of_range.
CriterionResult run_criterion(int id);

/// "PASS [3] exact zeta values (0.00 s / 1 s): detail"
std::string format_line(const CriterionResult& result);

/// Prints one line per criterion as they finish and a summary line.
/// Returns true when all passed.
bool report(std::ostream& out);

}  // namespace slzeta::acceptance
