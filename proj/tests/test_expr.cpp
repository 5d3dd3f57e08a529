#include "doctest.h"

#include "bihilbert/expr.hpp"
#include "bihilbert/errors.hpp"

using namespace bihilbert;
using B = Bicomplexd;

TEST_CASE("units") {
  CHECK(evaluate("i1*i2") == B::j());
  CHECK(evaluate("i2*i1") == B::j());
  CHECK(evaluate("j*j") == B(1.0));
  CHECK(evaluate("i2^2") == B(-1.0));
  CHECK(evaluate("e1*e2") == B());
  CHECK(evaluate("e1 + e2") == B(1.0));
  CHECK(evaluate("e1^5") == B::e1());
}

TEST_CASE("precedence and numbers") {
  CHECK(evaluate("1 + 2*3") == B(7.0));
  CHECK(evaluate("(1 + 2)*3") == B(9.0));
  CHECK(evaluate("-2^2") == B(-4.0));
  CHECK(evaluate("2e1") == B(20.0));
  CHECK(evaluate("2*e1") == B::e1() * 2.0);
  CHECK(evaluate("1.5e-1 + .5") == B(0.65));
  CHECK(evaluate("2^-1") == B(0.5));
  CHECK(evaluate("8/2/2") == B(2.0));
}

TEST_CASE("functions") {
  CHECK(evaluate("conj1(i1 + i2)") == B({0, -1}, {1, 0}));
  CHECK(evaluate("conj2(i1 + i2)") == B({0, 1}, {-1, 0}));
  CHECK(evaluate("conj3(j)") == B::j());
  const B r = evaluate("sqrt(4)");
  CHECK(euclid_norm(B(r * r - B(4.0))) < 1e-15);
}

TEST_CASE("the worked product") {
  const B w = evaluate("(1 + 2*i1) + (3 + 4*i1)*i2");
  CHECK(w * w == evaluate("(4 - 20*i1) + (-10 + 20*i1)*i2"));
  const B inv = evaluate("1/(2 + j)");
  CHECK(euclid_norm(B(inv - evaluate("2/3 - j/3"))) < 1e-15);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(evaluate("1/(e1)"), NullConeError);
  CHECK_THROWS_AS(evaluate("e2^-1"), NullConeError);
  CHECK_THROWS_AS(evaluate(""), ParseError);
  CHECK_THROWS_AS(evaluate("1 +"), ParseError);
  CHECK_THROWS_AS(evaluate("(1"), ParseError);
  CHECK_THROWS_AS(evaluate("k"), ParseError);
  CHECK_THROWS_AS(evaluate("2^1.5"), ParseError);
  CHECK_THROWS_AS(evaluate("1 2"), ParseError);
  CHECK_THROWS_AS(evaluate("sqrt 4"), ParseError);
  try {
    evaluate("1 + *");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}
