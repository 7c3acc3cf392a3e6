#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heatlab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the eleven acceptance criteria in order. Each result carries the
/// measured quantities in `detail`.
std::vector<CriterionResult> run_all();

bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion: "[PASS] 3. proof identity chain ... (0.12 s)".
void print_table(std::ostream& os, const std::vector<CriterionResult>& results);

std::string to_json(const std::vector<CriterionResult>& results);

}  // namespace heatlab::acceptance
