#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"

#include "bihilbert/cli.hpp"
#include "bihilbert/json_io.hpp"

using namespace bihilbert;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bihilbert_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

struct Run {
  int code;
  std::string out;
};

Run run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + BIHILBERT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

constexpr const char* kTwoKets = R"({"space": {"dim": 2},
  "kets": [{"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}, {"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [1, 0], "z2": [0, 0]}]}]})";

}  // namespace

TEST_CASE("eval") {
  std::ostringstream out, err;
  CHECK(cli::cmd_eval("i1*i2", true, out, err) == cli::kOk);
  const Json j = Json::parse(out.str());
  CHECK(io::bicomplex_from_json(j["cartesian"]) == Bicomplexd::j());
  CHECK(j["idempotent"] == Json::parse(R"({"h1": [1.0, 0.0], "h2": [-1.0, 0.0]})"));

  std::ostringstream out2, err2;
  CHECK(cli::cmd_eval("1/(e1)", true, out2, err2) == cli::kNullCone);
  CHECK(out2.str().empty());
  CHECK_FALSE(err2.str().empty());

  std::ostringstream out3, err3;
  CHECK(cli::cmd_eval("1 +", true, out3, err3) == cli::kUsage);
  CHECK(out3.str().empty());
}

TEST_CASE("verify") {
  verify::VerifyOptions o;
  o.trials = 20;
  o.dim = 4;
  std::ostringstream out, err;
  CHECK(cli::cmd_verify("core-identities", o, true, out, err) == cli::kOk);
  CHECK(Json::parse(out.str())["failures"] == 0);

  std::ostringstream all;
  CHECK(cli::cmd_verify("all", o, true, all, err) == cli::kOk);
  const Json j = Json::parse(all.str());
  CHECK(j["suite"] == "all");
  CHECK(j["reports"].size() == verify::suite_names().size());

  std::ostringstream bad, bad_err;
  CHECK(cli::cmd_verify("bogus", o, true, bad, bad_err) == cli::kUsage);
  CHECK(bad.str().empty());
}

TEST_CASE("gram-schmidt command") {
  TempDir dir;
  const auto input = dir.write("in.json", kTwoKets);
  std::ostringstream out, err;
  CHECK(cli::cmd_gram_schmidt(input, {}, true, out, err) == cli::kOk);
  const auto sys = io::system_from_json(Json::parse(out.str()));
  REQUIRE(sys.size() == 2);
  CHECK(sys[1][0] == Bicomplexd());
  CHECK(sys[1][1] == Bicomplexd(1.0));

  const auto target = dir.path / "out.json";
  std::ostringstream quiet;
  CHECK(cli::cmd_gram_schmidt(input, target, false, quiet, err) == cli::kOk);
  CHECK(quiet.str().empty());
  CHECK(io::system_from_json(Json::parse(std::ifstream(target))).kets() == sys.kets());

  // Breakdown: no output file, index on stderr.
  const auto null_input = dir.write("null.json", R"({"space": {"dim": 2}, "kets": [{"coeffs": [{"h1": [1, 0], "h2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}]})");
  const auto never = dir.path / "never.json";
  std::ostringstream out2, err2;
  CHECK(cli::cmd_gram_schmidt(null_input, never, true, out2, err2) == cli::kNullCone);
  CHECK_FALSE(fs::exists(never));
  CHECK(err2.str().find("breakdown index: 0") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli::cmd_gram_schmidt(dir.path / "missing.json", {}, true, out3, err3) == cli::kIo);
  const auto garbage = dir.write("garbage.json", "{not json");
  CHECK(cli::cmd_gram_schmidt(garbage, {}, true, out3, err3) == cli::kUsage);
  const auto mismatch = dir.write("mismatch.json", R"({"space": {"dim": 3}, "kets": [{"coeffs": [{"z1": [0, 0], "z2": [0, 0]}]}]})");
  CHECK(cli::cmd_gram_schmidt(mismatch, {}, true, out3, err3) == cli::kUsage);
  CHECK(out3.str().empty());
}

TEST_CASE("rf command") {
  TempDir dir;
  const std::string system = R"({"space": {"dim": 2},
    "kets": [{"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}, {"coeffs": [{"z1": [0, 0], "z2": [0, 0]}, {"z1": [1, 0], "z2": [0, 0]}]}]})";
  const auto fwd = dir.write("fwd.json", R"({"system": )" + system +
                                             R"(, "ket": {"coeffs": [{"z1": [3, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [4, 0]}]}})");
  std::ostringstream out, err;
  CHECK(cli::cmd_rf(fwd, true, out, err) == cli::kOk);
  const Json j = Json::parse(out.str());
  const auto seq = io::sequence_from_json(j["sequence"]);
  CHECK(seq[0] == Bicomplexd(3.0));
  CHECK(seq[1] == Bicomplexd::i2() * 4.0);
  CHECK(j["isometry_residual"].get<double>() <= 1e-15);

  const auto inv = dir.write("inv.json", R"({"system": )" + system + R"(, "sequence": {"values": [{"z1": [0, 0], "z2": [0, 0]}, {"z1": [1, 0], "z2": [0, 0]}]}})");
  std::ostringstream out2;
  CHECK(cli::cmd_rf(inv, true, out2, err) == cli::kOk);
  const Json k = Json::parse(out2.str());
  CHECK(io::ket_from_json(k["ket"])[1] == Bicomplexd(1.0));
  CHECK(k.contains("round_trip_residual"));

  const auto skew = dir.write("skew.json", R"({"system": {"space": {"dim": 2},
    "kets": [{"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}, {"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [1, 0], "z2": [0, 0]}]}]},
    "ket": {"coeffs": [{"z1": [0, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}})");
  std::ostringstream out3;
  CHECK(cli::cmd_rf(skew, true, out3, err) == cli::kUsage);
  CHECK(out3.str().empty());
}

TEST_CASE("binary exit codes and determinism") {
  CHECK(run_binary("eval 'e1*e2'").code == 0);
  CHECK(run_binary("eval '1/(e1)'").code == 3);
  CHECK(run_binary("eval").code == 2);
  CHECK(run_binary("frobnicate").code == 2);
  CHECK(run_binary("verify --suite nope").code == 2);
  CHECK(run_binary("rf --input /nonexistent/in.json").code == 4);

  const auto compact = run_binary("--json eval j");
  CHECK(compact.out.find('\n') == compact.out.size() - 1);
  CHECK(run_binary("eval j --json").out == compact.out);

  auto strip = [](const std::string& text) {
    Json j = Json::parse(text);
    j.erase("elapsed_ms");
    return j;
  };
  const auto a = run_binary("verify --suite moduli --trials 50 --seed 9 --threads 1");
  const auto b = run_binary("verify --suite moduli --trials 50 --seed 9 --threads 3");
  CHECK(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
}
