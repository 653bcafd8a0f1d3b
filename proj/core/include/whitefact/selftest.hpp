#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace whitefact {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool passed() const { return checks_passed && seconds < limit_seconds; }
};

inline constexpr int kCriterionCount = 8;

// Runs acceptance criterion `id` (1..8) with the given seed.
CriterionResult run_criterion(int id, std::uint64_t seed = 0);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

// "PASS [3] volume-decrease law: ... (1.20 s, limit 30 s)"
std::string format_result(const CriterionResult& r);

}  // namespace whitefact
