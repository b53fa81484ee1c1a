#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace energylab {

struct CriterionResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CriterionResult> criteria;
  double seconds = 0.0;

  [[nodiscard]] bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Replaces the suite's default order(s) where one applies (thm2, thm7, thm8).
  std::optional<std::size_t> n;
  /// Replaces the default degree where one applies (thm7, thm8).
  std::optional<std::size_t> k;
  /// Replaces the default trial/sample count where one applies.
  std::optional<std::size_t> trials;
  /// Relative tolerance for equality criteria (default 1e-9).
  std::optional<double> tolerance;
};

/// Suites, in the order `verify all` runs them.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
[[nodiscard]] SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

[[nodiscard]] std::string to_json(const std::vector<SuiteResult>& results, int indent = 2);

}  // namespace energylab
