#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bihilbert/cli.hpp"

namespace {

// BIHILBERT_SEED replaces the default seed; an explicit --seed still wins.
std::uint64_t default_seed() {
  if (const char* env = std::getenv("BIHILBERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed BIHILBERT_SEED='" << env << "'\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bihilbert;

  CLI::App app{"Bicomplex Hilbert-module toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--json", compact, "Compact single-line JSON output");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a bicomplex expression");
  eval->add_option("expr", expr, "Expression, e.g. \"(1+i1)*e1 + conj3(j)\"")->required();

  std::string suite;
  verify::VerifyOptions options;
  options.seed = default_seed();
  options.threads = 0;
  auto* ver = app.add_subcommand("verify", "Run seeded verification suites");
  ver->add_option("--suite", suite, "Suite name or 'all'")->required();
  ver->add_option("--trials", options.trials, "Number of random trials")->capture_default_str();
  ver->add_option("--seed", options.seed, "Master seed")->capture_default_str();
  ver->add_option("--dim", options.dim, "Module dimension")->capture_default_str();
  ver->add_option("--threads", options.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();

  std::string gs_input, gs_output;
  auto* gs = app.add_subcommand("gram-schmidt", "Orthonormalize the kets of a JSON file");
  gs->add_option("--input", gs_input, "Input JSON {space, kets}")->required();
  gs->add_option("--output", gs_output, "Output path (default: stdout)");

  std::string rf_input;
  auto* rf = app.add_subcommand("rf", "Apply the Riesz-Fischer map or its inverse");
  rf->add_option("--input", rf_input, "Input JSON {system, ket | sequence}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*eval) return cli::cmd_eval(expr, compact, std::cout, std::cerr);
  if (*ver) return cli::cmd_verify(suite, options, compact, std::cout, std::cerr);
  if (*gs) return cli::cmd_gram_schmidt(gs_input, gs_output, compact, std::cout, std::cerr);
  return cli::cmd_rf(rf_input, compact, std::cout, std::cerr);
}
