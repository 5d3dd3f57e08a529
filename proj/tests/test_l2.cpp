#include <numbers>
#include <vector>

#include "doctest.h"

#include "bihilbert/l2.hpp"
#include "verify/random.hpp"

using namespace bihilbert;
using B = Bicomplexd;
using Seq = BicomplexSequence<double>;

namespace {

Seq seq(std::initializer_list<B> values) {
  Seq::Values v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index l = 0;
  for (const auto& x : values) v[l++] = x;
  return Seq(v);
}

RieszFischerMap<double> random_map(verify::detail::TrialRng& rng, Eigen::Index n) {
  const auto spec = rng.space(n, 0.5, 2.0);
  std::vector<Ketd> inputs;
  for (Eigen::Index a = 0; a < n; ++a) inputs.push_back(rng.ket(n, false));
  return RieszFischerMap<double>(gram_schmidt(spec, inputs));
}

RieszFischerMap<double> standard_map(Eigen::Index n) {
  std::vector<Ketd> basis;
  for (Eigen::Index l = 0; l < n; ++l) {
    Ketd e = Ketd::Zero(n);
    e[l] = B::one();
    basis.push_back(e);
  }
  return RieszFischerMap<double>(OrthonormalSystem<double>(ScalarProductSpec<double>(n), basis));
}

}  // namespace

TEST_CASE("l2 norm") {
  CHECK(l2_norm(Seq::zero(5)) == 0.0);
  CHECK(l2_norm(seq({B(1.0), B::i2()})) == doctest::Approx(std::numbers::sqrt2));
  CHECK(l2_norm(seq({B::e1()})) == doctest::Approx(euclid_norm(B::e1())));
  CHECK(l2_norm(Seq()) == 0.0);
}

TEST_CASE("sequence split") {
  const auto one = seq({B(1.0)});
  CHECK(sequence_split(one, Idempotent::e1)[0] == std::complex<double>(1, 0));
  CHECK(sequence_split(one, Idempotent::e2)[0] == std::complex<double>(1, 0));
  const auto j = seq({B::j()});
  CHECK(sequence_split(j, Idempotent::e1)[0] == std::complex<double>(1, 0));
  CHECK(sequence_split(j, Idempotent::e2)[0] == std::complex<double>(-1, 0));

  verify::detail::TrialRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Seq s(rng.ket(64));
    const double lhs = std::pow(l2_norm(s), 2);
    const double rhs =
        0.5 * (sequence_split(s, Idempotent::e1).squaredNorm() + sequence_split(s, Idempotent::e2).squaredNorm());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(l2_norm(s) == doctest::Approx(split_norm(s)).epsilon(1e-12));
    const auto back = sequence_from_components(sequence_split(s, Idempotent::e1), sequence_split(s, Idempotent::e2));
    CHECK(l2_norm(back - s) <= 1e-15 * l2_norm(s));
  }
}

TEST_CASE("l2 scalar product induces the l2 norm") {
  verify::detail::TrialRng rng(4);
  const Seq s(rng.ket(10));
  const auto self = l2_scalar_product(s, s);
  CHECK(std::sqrt(0.5 * (self.z1().real() * 2)) == doctest::Approx(l2_norm(s)));
  CHECK(euclid_norm(sqrt(self)) == doctest::Approx(l2_norm(s)));
  CHECK_THROWS_AS(l2_scalar_product(s, Seq::zero(3)), DimensionMismatch);
}

TEST_CASE("Riesz-Fischer map on the standard basis") {
  const auto map = standard_map(2);
  Ketd psi(2);
  psi << B(1.0), B::j();
  const auto t = rf_forward(map, psi);
  CHECK(t.values() == psi);
  CHECK(l2_norm(t) == doctest::Approx(induced_norm(map.basis().space(), psi)));
  CHECK(rf_inverse(map, Seq::zero(2)) == Ketd::Zero(2));
  CHECK(rf_inverse(map, seq({B(), B(1.0)})) == map.basis()[1]);
  CHECK(rf_component(map, psi, Idempotent::e1).values() == (psi * B::e1()).eval());
  CHECK_THROWS_AS(rf_inverse(map, Seq::zero(3)), DimensionMismatch);
  CHECK_THROWS_AS(rf_forward(map, Ketd(Ketd::Zero(3))), DimensionMismatch);
}

TEST_CASE("Riesz-Fischer map needs a full basis") {
  const ScalarProductSpec<double> unit(2);
  Ketd e(2);
  e << B(1.0), B();
  CHECK_THROWS_AS(RieszFischerMap<double>(OrthonormalSystem<double>(unit, {e})), DimensionMismatch);
}

TEST_CASE("Riesz-Fischer isometry, linearity and component lemma") {
  verify::detail::TrialRng rng(2024);
  for (int b = 0; b < 4; ++b) {
    const auto map = random_map(rng, 24);
    const auto& spec = map.basis().space();
    for (int trial = 0; trial < 50; ++trial) {
      const Ketd psi = rng.ket(24), phi = rng.ket(24);
      const B alpha = trial % 2 ? rng.null_cone_value() : rng.bicomplex();
      const B beta = rng.bicomplex();
      const double npsi = induced_norm(spec, psi);
      const auto t = map.forward(psi);

      CHECK(std::abs(l2_norm(t) - npsi) <= 1e-10);
      CHECK(l2_norm(map.forward(Ketd(psi * alpha + phi * beta)) - (alpha * t + beta * map.forward(phi))) <=
            1e-10 * std::max(1.0, euclid_norm(alpha) * npsi + euclid_norm(beta) * induced_norm(spec, phi)));
      CHECK(induced_norm(spec, Ketd(map.inverse(t) - psi)) <= 1e-10 * npsi);
      for (const auto k : {Idempotent::e1, Idempotent::e2}) {
        CHECK(l2_norm(map.component(psi, k) - map.forward(split(psi, k))) <= 1e-10 * npsi);
      }
      CHECK(l2_norm(map.component(psi, Idempotent::e1) + map.component(psi, Idempotent::e2) - t) <= 1e-10 * npsi);

      const Seq s(rng.ket(24));
      CHECK(l2_norm(map.forward(map.inverse(s)) - s) <= 1e-10 * l2_norm(s));
    }
  }
}

TEST_CASE("injectivity: small images come from small kets") {
  verify::detail::TrialRng rng(31);
  const auto map = random_map(rng, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const Ketd psi = rng.ket(12) * B(std::pow(10.0, -rng.uniform(6, 14)));
    CHECK(induced_norm(map.basis().space(), psi) <= l2_norm(map.forward(psi)) * (1 + 1e-10));
  }
  CHECK(l2_norm(map.forward(Ketd(Ketd::Zero(12)))) == 0.0);
}
