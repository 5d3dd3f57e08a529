#include "bihilbert/json_io.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bihilbert::io {
namespace {

Json pair_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite number");
  return v;
}

std::complex<double> complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + ": expected [re, im]");
  return {finite_number(j[0], what), finite_number(j[1], what)};
}

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

Eigen::VectorXd weights_from_json(const Json& j, const char* key, Eigen::Index dim) {
  const auto it = j.find(key);
  if (it == j.end()) return Eigen::VectorXd::Ones(dim);
  if (!it->is_array()) throw ParseError(std::string("space: \"") + key + "\" must be an array");
  if (static_cast<Eigen::Index>(it->size()) != dim) {
    throw ParseError(std::string("space: \"") + key + "\" has " + std::to_string(it->size()) +
                     " entries, expected " + std::to_string(dim));
  }
  Eigen::VectorXd w(dim);
  for (Eigen::Index l = 0; l < dim; ++l) w[l] = finite_number((*it)[static_cast<std::size_t>(l)], "weight");
  return w;
}

Json values_json(const Eigen::Matrix<Bicomplexd, Eigen::Dynamic, 1>& v) {
  Json arr = Json::array();
  for (Eigen::Index l = 0; l < v.size(); ++l) arr.push_back(to_json(v[l]));
  return arr;
}

Ketd values_from_json(const Json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array");
  Ketd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t l = 0; l < arr.size(); ++l) v[static_cast<Eigen::Index>(l)] = bicomplex_from_json(arr[l]);
  return v;
}

}  // namespace

Json to_json(const Bicomplexd& w) { return Json{{"z1", pair_json(w.z1())}, {"z2", pair_json(w.z2())}}; }

Json to_json(const IdempotentPair<double>& p) { return Json{{"h1", pair_json(p.h1)}, {"h2", pair_json(p.h2)}}; }

Json to_json(const Ketd& psi) { return Json{{"coeffs", values_json(psi)}}; }

Json to_json(const ScalarProductSpec<double>& spec) {
  return Json{{"dim", spec.dim()},
              {"w1", std::vector<double>(spec.w1().data(), spec.w1().data() + spec.dim())},
              {"w2", std::vector<double>(spec.w2().data(), spec.w2().data() + spec.dim())}};
}

Json to_json(const OrthonormalSystem<double>& sys) {
  Json kets = Json::array();
  for (const auto& m : sys.kets()) kets.push_back(to_json(m));
  return Json{{"space", to_json(sys.space())}, {"kets", std::move(kets)}};
}

Json to_json(const BicomplexSequence<double>& s) { return Json{{"values", values_json(s.values())}, {"tail", "zero"}}; }

Bicomplexd bicomplex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bicomplex: expected an object");
  if (j.contains("z1") || j.contains("z2")) {
    if (j.contains("h1") || j.contains("h2")) throw ParseError("bicomplex: mixes Cartesian and idempotent keys");
    return {complex_from_json(member(j, "z1", "bicomplex"), "z1"),
            complex_from_json(member(j, "z2", "bicomplex"), "z2")};
  }
  if (j.contains("h1") || j.contains("h2")) {
    return from_idempotent(complex_from_json(member(j, "h1", "bicomplex"), "h1"),
                           complex_from_json(member(j, "h2", "bicomplex"), "h2"));
  }
  throw ParseError("bicomplex: expected keys z1/z2 or h1/h2");
}

Ketd ket_from_json(const Json& j) { return values_from_json(member(j, "coeffs", "ket"), "ket coeffs"); }

ScalarProductSpec<double> space_from_json(const Json& j) {
  const Json& dim_json = member(j, "dim", "space");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() <= 0) {
    throw ParseError("space: \"dim\" must be a positive integer");
  }
  const auto dim = static_cast<Eigen::Index>(dim_json.get<long long>());
  try {
    return ScalarProductSpec<double>(weights_from_json(j, "w1", dim), weights_from_json(j, "w2", dim));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("space: ") + e.what());
  }
}

OrthonormalSystem<double> system_from_json(const Json& j) {
  auto space = space_from_json(member(j, "space", "system"));
  const Json& arr = member(j, "kets", "system");
  if (!arr.is_array()) throw ParseError("system: \"kets\" must be an array");
  std::vector<Ketd> kets;
  kets.reserve(arr.size());
  for (const auto& k : arr) kets.push_back(ket_from_json(k));
  return OrthonormalSystem<double>(std::move(space), std::move(kets));
}

BicomplexSequence<double> sequence_from_json(const Json& j) {
  if (j.is_object() && j.contains("tail") && j["tail"] != "zero") {
    throw ParseError("sequence: only the \"zero\" tail model is supported");
  }
  return BicomplexSequence<double>(values_from_json(member(j, "values", "sequence"), "sequence values"));
}

}  // namespace bihilbert::io
