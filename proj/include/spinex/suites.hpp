#pragma once

// Invariant suites behind the `verify-all` command. Each check reduces to a
// single residual compared against a threshold.

#include <cstdint>
#include <string>
#include <vector>

namespace spinex {

enum class Comparison { kLess, kGreater, kGreaterEqual, kEqual };

const char* to_string(Comparison c) noexcept;

struct CheckResult {
  std::string suite;
  std::string check;
  double residual = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::kLess;
  bool passed = false;
};

CheckResult make_check(std::string suite, std::string check, double residual, double threshold,
                       Comparison comparison = Comparison::kLess);

struct SuiteConfig {
  std::uint64_t seed = 0;
  double tolerance = 1e-10;  // replaces the default 1e-10 thresholds
  int geometry_trials = 20;
};

std::vector<CheckResult> spin_algebra_suite(const SuiteConfig& cfg);
std::vector<CheckResult> orbital_suite(const SuiteConfig& cfg);
std::vector<CheckResult> exchange_suite(const SuiteConfig& cfg);
std::vector<CheckResult> tilted_suite(const SuiteConfig& cfg);
std::vector<CheckResult> region_suite(const SuiteConfig& cfg);

/// All five suites in the order above.
std::vector<CheckResult> all_suites(const SuiteConfig& cfg);

}  // namespace spinex
