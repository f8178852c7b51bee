#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqspace/random.hpp"

namespace seqspace {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& opt = {});

/// "PASS  7  shift-exponent bridge  observed: ...  expected: ..."
std::string format_result(const CriterionResult& r);

}  // namespace seqspace
