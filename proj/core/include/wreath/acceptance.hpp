#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreath {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The eleven end-to-end checks, in order.
std::vector<Criterion> acceptance_criteria();

/// Runs every criterion (or only `only` when nonzero), printing one PASS/FAIL
/// line per criterion to `out`. Exceptions count as failures.
std::vector<CriterionResult> run_acceptance(std::ostream& out, int only = 0);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wreath
