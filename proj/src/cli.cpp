#include "bihilbert/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bihilbert/expr.hpp"
#include "bihilbert/json_io.hpp"

namespace bihilbert::cli {
namespace {

using io::Json;

void print(std::ostream& out, const Json& j, bool compact) { out << (compact ? j.dump() : j.dump(2)) << '\n'; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// Writes next to the target and renames, so a failed run leaves no partial file.
void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into '" + path.string() + "'");
  }
}

// Shared mapping from library errors to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const NullConeBreakdown& e) {
    err << "error: " << e.what() << '\n' << "breakdown index: " << e.index() << '\n';
    return kNullCone;
  } catch (const NullConeError& e) {
    err << "error: " << e.what() << '\n';
    return kNullCone;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int cmd_eval(std::string_view expr, bool compact, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bicomplexd w = evaluate(expr);
    print(out, Json{{"cartesian", io::to_json(w)}, {"idempotent", io::to_json(to_idempotent(w))}}, compact);
    return kOk;
  });
}

int cmd_verify(const std::string& suite, const verify::VerifyOptions& options, bool compact, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto reports = verify::run_suites(suite, options);
    std::int64_t failures = 0;
    for (const auto& r : reports) failures += r.failures;

    if (suite == "all") {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(verify::to_json(r));
      print(out, Json{{"suite", "all"}, {"failures", failures}, {"reports", std::move(arr)}}, compact);
    } else {
      print(out, verify::to_json(reports.front()), compact);
    }
    return failures == 0 ? kOk : kCheckFailed;
  });
}

int cmd_gram_schmidt(const std::filesystem::path& input, const std::filesystem::path& output, bool compact,
                     std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = read_json(input);
    const auto space = io::space_from_json(doc.at("space"));
    if (!doc.at("kets").is_array()) throw ParseError("\"kets\" must be an array");
    std::vector<Ketd> kets;
    for (const auto& k : doc.at("kets")) kets.push_back(io::ket_from_json(k));

    const auto sys = gram_schmidt(space, kets);
    const Json result = io::to_json(sys);
    if (output.empty()) {
      print(out, result, compact);
    } else {
      write_atomically(output, (compact ? result.dump() : result.dump(2)) + "\n");
    }
    return kOk;
  });
}

int cmd_rf(const std::filesystem::path& input, bool compact, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = read_json(input);
    const RieszFischerMap<double> map(io::system_from_json(doc.at("system")));
    const auto& space = map.basis().space();
    const double defect = orthonormality_defect(map.basis());
    if (defect > rf_residual_tolerance) {
      throw InvalidArgument("system is not orthonormal (defect " + std::to_string(defect) + ")");
    }

    Json result;
    double worst = 0;
    if (doc.contains("ket")) {
      const Ketd psi = io::ket_from_json(doc["ket"]);
      const auto seq = map.forward(psi);
      const double residual = std::abs(l2_norm(seq) - induced_norm(space, psi));
      result = Json{{"sequence", io::to_json(seq)}, {"isometry_residual", residual}};
      worst = residual;
    } else if (doc.contains("sequence")) {
      const auto seq = io::sequence_from_json(doc["sequence"]);
      const Ketd psi = map.inverse(seq);
      const double isometry = std::abs(l2_norm(seq) - induced_norm(space, psi));
      const double round_trip = l2_norm(map.forward(psi) - seq);
      result = Json{{"ket", io::to_json(psi)}, {"isometry_residual", isometry}, {"round_trip_residual", round_trip}};
      worst = std::max(isometry, round_trip);
    } else {
      throw ParseError("rf input needs a \"ket\" or a \"sequence\"");
    }

    print(out, result, compact);
    if (!(worst <= rf_residual_tolerance)) {
      err << "residual " << worst << " exceeds " << rf_residual_tolerance << '\n';
      return kCheckFailed;
    }
    return kOk;
  });
}

}  // namespace bihilbert::cli
