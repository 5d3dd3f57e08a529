#pragma once

// Command implementations behind the `bihilbert` executable. Each returns the
// process exit code and writes only to the given streams or output file.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bihilbert/verify.hpp"

namespace bihilbert::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verification failures or an out-of-tolerance residual
  kUsage = 2,        // parse errors, unknown suites, dimension mismatches
  kNullCone = 3,
  kIo = 4,
};

/// Tolerance on the isometry and round-trip residuals reported by `rf`.
inline constexpr double rf_residual_tolerance = 1e-10;

/// Prints {"cartesian": <bicomplex>, "idempotent": {"h1", "h2"}}.
int cmd_eval(std::string_view expr, bool compact, std::ostream& out, std::ostream& err);

/// Prints one report object, or {"suite": "all", "failures": n, "reports": [...]}.
int cmd_verify(const std::string& suite, const verify::VerifyOptions& options, bool compact, std::ostream& out,
               std::ostream& err);

/// Writes the orthonormal system to `output`, or to `out` when `output` is
/// empty. Nothing is written on failure.
int cmd_gram_schmidt(const std::filesystem::path& input, const std::filesystem::path& output, bool compact,
                     std::ostream& out, std::ostream& err);

/// Input: {"system": <system>, "ket": <ket>} or {"system": ..., "sequence": ...}.
int cmd_rf(const std::filesystem::path& input, bool compact, std::ostream& out, std::ostream& err);

}  // namespace bihilbert::cli
