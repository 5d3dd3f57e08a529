#include <set>

#include "doctest.h"

#include "bihilbert/errors.hpp"
#include "bihilbert/verify.hpp"

using namespace bihilbert;

namespace {

verify::VerifyOptions opts(std::int64_t trials, std::uint64_t seed, std::int64_t dim, unsigned threads) {
  verify::VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  o.dim = dim;
  o.threads = threads;
  return o;
}

nlohmann::json stripped(const verify::VerificationReport& r) {
  auto j = verify::to_json(r);
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("suite registry") {
  const auto& names = verify::suite_names();
  CHECK(names.size() == 11);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK_THROWS_AS(verify::run_suite("no-such-suite", opts(1, 0, 2, 1)), UnknownSuite);
  CHECK_THROWS_AS(verify::run_suite("norms", opts(-1, 0, 2, 1)), InvalidArgument);
  CHECK_THROWS_AS(verify::run_suite("norms", opts(1, 0, 0, 1)), InvalidArgument);
  CHECK(verify::run_suites("all", opts(2, 0, 2, 1)).size() == names.size());
}

TEST_CASE("trial seeds") {
  CHECK(verify::trial_seed(0, "norms", 0) == verify::trial_seed(0, "norms", 0));
  CHECK(verify::trial_seed(0, "norms", 0) != verify::trial_seed(0, "norms", 1));
  CHECK(verify::trial_seed(0, "norms", 0) != verify::trial_seed(1, "norms", 0));
  CHECK(verify::trial_seed(0, "norms", 0) != verify::trial_seed(0, "moduli", 0));
}

TEST_CASE("reports are independent of thread count") {
  for (const auto& name : verify::suite_names()) {
    CAPTURE(name);
    const auto one = verify::run_suite(name, opts(40, 7, 6, 1));
    const auto four = verify::run_suite(name, opts(40, 7, 6, 4));
    CHECK(stripped(one) == stripped(four));
    CHECK(one.failures == 0);
    CHECK(one.max_violation <= one.tolerance);
    CHECK(one.trials == 40);
    CHECK_FALSE(one.checks.empty());
    for (const auto& c : one.checks) {
      CHECK(c.failures <= one.failures);
      CHECK(c.max_violation <= one.max_violation);
    }
  }
}

TEST_CASE("report json shape") {
  const auto r = verify::run_suite("core-identities", opts(10, 3, 4, 1));
  const auto j = verify::to_json(r);
  for (const char* key : {"suite", "trials", "failures", "max_violation", "tolerance", "seed", "dim", "elapsed_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["suite"] == "core-identities");
  CHECK(j["max_violation"] == 0.0);
}

TEST_CASE("different seeds give different samples") {
  const auto a = verify::run_suite("scalar-axioms", opts(20, 1, 4, 1));
  const auto b = verify::run_suite("scalar-axioms", opts(20, 2, 4, 1));
  CHECK(a.max_violation != b.max_violation);
}
