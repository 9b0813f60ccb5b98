#pragma once

// The acceptance matrix: eleven end-to-end checks with pinned seeds and
// budgets, each timed against its own runtime limit.

#include <cstdint>
#include <string>
#include <vector>

namespace veronese {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool passed() const { return correct && seconds < limit_seconds; }
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed'2024;
};

inline constexpr int kCriterionCount = 11;

/// Runs criterion id in 1..11. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace veronese
