#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // the measured numbers behind the verdict
  double seconds = 0;
};

constexpr int kCriteria = 12;

/// Runs one numbered end-to-end check. Exceptions inside a check are reported
/// as a failure with the message in detail.
CriterionResult run_criterion(int id);
/// All criteria when ids is empty.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

/// One line per criterion: "[PASS] 3 title (0.12 s): detail".
void write_acceptance_lines(std::ostream& os, const std::vector<CriterionResult>& rows);
void write_acceptance_csv(std::ostream& os, const std::vector<CriterionResult>& rows);

}  // namespace fm
