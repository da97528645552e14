#pragma once

#include <string>
#include <vector>

namespace padic::audit {

/// One acceptance criterion outcome. Parameters, tolerances and
/// expected values are pinned inside the implementation; the suite is
/// deterministic (fixed seed).
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 11;
inline constexpr unsigned long kSeed = 1;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

} // namespace padic::audit
