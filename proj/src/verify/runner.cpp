#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "bihilbert/errors.hpp"
#include "suite.hpp"

namespace bihilbert::verify {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

unsigned resolve_threads(unsigned requested, std::int64_t trials) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::int64_t>(n, std::max<std::int64_t>(trials, 1)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core-identities", "conjugations",  "moduli",      "norms",
                                              "scalar-axioms",   "schwarz",       "continuity",  "gram-schmidt",
                                              "best-approx",     "l2-norm-equality", "rf-isometry"};
  return names;
}

std::uint64_t trial_seed(std::uint64_t master, std::string_view suite, std::uint64_t index) {
  return splitmix64(splitmix64(master ^ fnv1a(suite)) + index);
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& options) {
  auto suite = detail::make_suite(name);
  if (!suite) throw UnknownSuite("unknown suite '" + std::string(name) + "'");
  if (options.trials < 0) throw InvalidArgument("trial count must be nonnegative");
  if (options.dim < 1) throw InvalidArgument("dimension must be positive");

  const auto start = std::chrono::steady_clock::now();
  suite->prepare(options);

  const auto defs = suite->checks();
  const auto trials = static_cast<std::size_t>(options.trials);
  std::vector<std::vector<double>> results(trials, std::vector<double>(defs.size(), 0.0));

  // Trials pull indices from a shared counter; each writes only its own row,
  // so the outcome does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      detail::TrialRng rng(trial_seed(options.seed, suite->name(), i));
      detail::Recorder rec(results[i]);
      try {
        suite->trial(rng, rec);
      } catch (const std::exception&) {
        for (std::size_t c = 0; c < defs.size(); ++c) rec.fail(c);
      }
    }
  };
  const unsigned threads = resolve_threads(options.threads, options.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.suite = std::string(suite->name());
  report.trials = options.trials;
  report.tolerance = suite->tolerance();
  report.seed = options.seed;
  report.dim = options.dim;
  for (const auto& d : defs) report.checks.push_back({d.name, d.tolerance, 0.0, 0});

  for (const auto& row : results) {
    bool failed = false;
    for (std::size_t c = 0; c < defs.size(); ++c) {
      auto& check = report.checks[c];
      check.max_violation = std::max(check.max_violation, row[c]);
      if (row[c] > defs[c].tolerance) ++check.failures;

      const double factor =
          defs[c].tolerance == report.tolerance ? 1.0 : report.tolerance / defs[c].tolerance;
      const double scaled = row[c] == detail::Recorder::kInvalid ? row[c] : row[c] * factor;
      report.max_violation = std::max(report.max_violation, scaled);
      failed = failed || scaled > report.tolerance;
    }
    if (failed) ++report.failures;
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_suites(std::string_view name, const VerifyOptions& options) {
  if (name != "all") return {run_suite(name, options)};
  std::vector<VerificationReport> reports;
  for (const auto& n : suite_names()) reports.push_back(run_suite(n, options));
  return reports;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"tolerance", c.tolerance},
                      {"max_violation", c.max_violation},
                      {"failures", c.failures}});
  }
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"failures", r.failures},
          {"max_violation", r.max_violation},
          {"tolerance", r.tolerance},
          {"seed", r.seed},
          {"dim", r.dim},
          {"elapsed_ms", r.elapsed_ms},
          {"checks", std::move(checks)}};
}

}  // namespace bihilbert::verify
