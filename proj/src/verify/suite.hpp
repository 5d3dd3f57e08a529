#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bihilbert/verify.hpp"
#include "random.hpp"

namespace bihilbert::verify::detail {

struct CheckDef {
  std::string name;
  double tolerance;
};

/// Keeps the worst violation seen for each check during one trial.
class Recorder {
 public:
  explicit Recorder(std::vector<double>& slots) : slots_(slots) {}

  void record(std::size_t check, double violation) {
    if (!(violation >= 0)) violation = std::isnan(violation) ? kInvalid : 0.0;
    if (violation > slots_[check]) slots_[check] = violation;
  }

  void fail(std::size_t check) { record(check, kInvalid); }

  static constexpr double kInvalid = std::numeric_limits<double>::max();

 private:
  std::vector<double>& slots_;
};

/// A suite is prepared once, then trials run against it concurrently, so
/// trial() must not mutate the suite.
class Suite {
 public:
  virtual ~Suite() = default;
  virtual std::string_view name() const = 0;
  virtual double tolerance() const = 0;
  virtual std::vector<CheckDef> checks() const = 0;
  virtual void prepare(const VerifyOptions& options) { dim_ = options.dim; }
  virtual void trial(TrialRng& rng, Recorder& rec) const = 0;

 protected:
  Eigen::Index dim() const { return static_cast<Eigen::Index>(dim_); }

 private:
  std::int64_t dim_ = 0;
};

std::unique_ptr<Suite> make_suite(std::string_view name);

/// err / scale, or err when the scale vanishes.
inline double relative(double err, double scale) { return scale > 0 ? err / scale : err; }

}  // namespace bihilbert::verify::detail
