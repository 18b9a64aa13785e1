#pragma once

#include <functional>
#include <string>
#include <vector>

namespace arrgr {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Deterministic summary of what was checked, or the first failure.
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
  bool within_limit() const { return seconds <= limit_seconds; }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<CriterionResult()> run;
};

/// The reproduction criteria, in order.
std::vector<Criterion> paper_criteria();

/// Runs one criterion, timing it and turning exceptions into failures.
CriterionResult run_criterion(const Criterion& c);

}  // namespace arrgr
