#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace akchar {

/// Restrictions applied on top of each suite's default sweep.
struct VerifyOptions {
  /// Only this number of colours (m, or i for the closed-form suites).
  std::optional<std::size_t> m;
  /// Only this size (n, or a for the closed-form suites).
  std::optional<int> n;
  /// Replaces the suite's default maximum size.
  std::optional<int> max_n;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string suite;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// The first failing case in sweep order (smallest n first).
  std::optional<nlohmann::json> counterexample;

  bool ok() const noexcept { return passed == total; }
  nlohmann::json to_json() const;
};

/// oracle, ak-relations, shoji-relations, specialization, theta-closed-forms,
/// coef, hook-sum, wreath, dimension-identity.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

/// Every (k, l) with 0 <= k_i, l_i <= max_entry and min_total <= k + l <= max_total,
/// in lexicographic order of (k, l).
std::vector<std::pair<std::vector<int>, std::vector<int>>> list_alphabets(std::size_t m, int max_entry, int min_total,
                                                                          int max_total);

}  // namespace akchar
