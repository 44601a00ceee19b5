#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lcmlat {

/// Outcome of one reproduction check.
struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelfcheckOptions {
  /// Without the ten-element enumeration the dependent checks only cover
  /// sizes up to nine.
  bool include_n10 = true;
  std::uint64_t seed = 20240601;
  int threads = 0;
  /// Called after every finished check.
  std::function<void(const CheckResult&)> on_result;
};

/// Ids "1" ... "11" and "classes", in that order.
std::vector<std::string> selfcheck_ids();

/// Runs the listed checks (all when empty). Checks never throw; an exception
/// is reported as a failure with its message.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options,
                                       const std::vector<std::string>& ids = {});

}  // namespace lcmlat
