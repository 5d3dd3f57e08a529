#include <limits>

#include "doctest.h"

#include "bihilbert/json_io.hpp"

using namespace bihilbert;
using io::Json;
using B = Bicomplexd;

TEST_CASE("bicomplex encoding") {
  const B w({1.5, -2}, {0, 3});
  const Json j = io::to_json(w);
  CHECK(j == Json::parse(R"({"z1": [1.5, -2.0], "z2": [0.0, 3.0]})"));
  CHECK(io::bicomplex_from_json(j) == w);
  CHECK(io::to_json(to_idempotent(B::j())) == Json::parse(R"({"h1": [1.0, 0.0], "h2": [-1.0, 0.0]})"));
}

TEST_CASE("bicomplex decoding accepts idempotent coordinates") {
  CHECK(io::bicomplex_from_json(Json::parse(R"({"h1": [1, 0], "h2": [0, 0]})")) == B::e1());
  CHECK(io::bicomplex_from_json(Json::parse(R"({"h1": [2, 1], "h2": [2, 1]})")) == B(std::complex<double>(2, 1)));
}

TEST_CASE("bicomplex decoding errors") {
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"({"z1": [2, 0]})")), ParseError);
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"({})")), ParseError);
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"({"z1": [1, 0], "h1": [1, 0]})")), ParseError);
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"({"z1": [1]})")), ParseError);
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"({"z1": "one"})")), ParseError);
  CHECK_THROWS_AS(io::bicomplex_from_json(Json::parse(R"([1, 0])")), ParseError);
  Json inf = Json::parse(R"({"z1": [0, 0]})");
  inf["z1"][0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(io::bicomplex_from_json(inf), ParseError);
}

TEST_CASE("ket and space round trips") {
  Ketd psi(2);
  psi << B::j(), B({0.25, 0}, {0, -1});
  CHECK(io::ket_from_json(io::to_json(psi)) == psi);
  CHECK_THROWS_AS(io::ket_from_json(Json::parse(R"({"coeffs": 3})")), ParseError);

  const auto unit = io::space_from_json(Json::parse(R"({"dim": 3})"));
  CHECK(unit == ScalarProductSpec<double>(3));

  Eigen::VectorXd w1(2), w2(2);
  w1 << 1, 2;
  w2 << 0.5, 4;
  const ScalarProductSpec<double> weighted(w1, w2);
  CHECK(io::space_from_json(io::to_json(weighted)) == weighted);

  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"dim": 0})")), ParseError);
  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"dim": 1.5})")), ParseError);
  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"dim": 2, "w1": [1]})")), ParseError);
  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"dim": 1, "w1": [-1]})")), ParseError);
}

TEST_CASE("system and sequence") {
  const Json doc = Json::parse(R"({"space": {"dim": 2},
    "kets": [{"coeffs": [{"z1": [1, 0], "z2": [0, 0]}, {"z1": [0, 0], "z2": [0, 0]}]}, {"coeffs": [{"z1": [0, 0], "z2": [0, 0]}, {"z1": [1, 0], "z2": [0, 0]}]}]})");
  const auto sys = io::system_from_json(doc);
  CHECK(sys.size() == 2);
  CHECK(sys.is_full_basis());
  CHECK(io::system_from_json(io::to_json(sys)).kets() == sys.kets());
  CHECK_THROWS_AS(io::system_from_json(Json::parse(R"({"space": {"dim": 2}, "kets": [{"coeffs": [{"z1": [0, 0], "z2": [0, 0]}]}]})")),
                  DimensionMismatch);

  const auto s = io::sequence_from_json(Json::parse(R"({"values": [{"z1": [0, 0], "z2": [1, 0]}], "tail": "zero"})"));
  CHECK(s.size() == 1);
  CHECK(s[0] == B::i2());
  CHECK(io::to_json(s)["tail"] == "zero");
  CHECK_THROWS_AS(io::sequence_from_json(Json::parse(R"({"values": [], "tail": "periodic"})")), ParseError);
}
