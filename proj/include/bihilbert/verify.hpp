#pragma once

// Seeded randomized verification suites over the library's invariants.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bihilbert::verify {

struct VerifyOptions {
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t dim = 16;
  unsigned threads = 1;  // 0 picks the hardware concurrency
};

/// One named property inside a suite.
struct CheckSummary {
  std::string name;
  double tolerance = 0;
  double max_violation = 0;
  std::int64_t failures = 0;
};

/// A trial fails when any of its checks exceeds that check's own tolerance.
/// max_violation is reported on the suite tolerance scale (each check's
/// violation multiplied by suite tolerance / check tolerance), so
/// failures == 0 exactly when max_violation <= tolerance.
struct VerificationReport {
  std::string suite;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  double max_violation = 0;
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::int64_t dim = 0;
  double elapsed_ms = 0;
  std::vector<CheckSummary> checks;
};

/// Every suite name accepted by run_suite(), excluding "all".
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for names not in suite_names().
VerificationReport run_suite(std::string_view name, const VerifyOptions& options);

/// Like run_suite(), but also accepts "all".
std::vector<VerificationReport> run_suites(std::string_view name, const VerifyOptions& options);

nlohmann::json to_json(const VerificationReport& report);

/// Counter-mode seed for trial `index` of `suite`.
std::uint64_t trial_seed(std::uint64_t master, std::string_view suite, std::uint64_t index);

}  // namespace bihilbert::verify
