#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shadowdyn {

/// Outcome of one exact or numerical check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::int64_t cases = 0;
  std::string detail;
};

struct VerifyOptions {
  int depth = 10;
  std::vector<std::int64_t> ds{2, 3, 5, 6, 7, 13};
  std::vector<std::int64_t> ms{-2, 1, 3};
  std::int64_t range = 30;
  unsigned threads = 1;
};

std::vector<CheckResult> verify_markov(const VerifyOptions& opts);
std::vector<CheckResult> verify_mordell(const VerifyOptions& opts);
std::vector<CheckResult> verify_topograph(const VerifyOptions& opts);
/// Numerical checks; the detail field carries the measured value and bound.
std::vector<CheckResult> verify_growth(const VerifyOptions& opts);

/// "markov", "mordell", "topograph", "growth" or "all". Throws Parse.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace shadowdyn
