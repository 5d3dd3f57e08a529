#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bihilbert/module.hpp"

namespace bihilbert::verify::detail {

// Share of random values pushed next to the null cone, and how far.
inline constexpr double kInjectionRate = 0.05;
inline constexpr double kInjectionScale = 1e-14;

class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  /// Components uniform in [-10, 10]; with `inject`, 5% of values get one
  /// idempotent coordinate scaled by 1e-14.
  Bicomplexd bicomplex(bool inject = true) {
    const double a = uniform(-10, 10);
    const double b = uniform(-10, 10);
    const double c = uniform(-10, 10);
    const double d = uniform(-10, 10);
    Bicomplexd w({a, b}, {c, d});
    if (inject && chance(kInjectionRate)) {
      auto p = to_idempotent(w);
      p[chance(0.5) ? Idempotent::e1 : Idempotent::e2] *= kInjectionScale;
      w = from_idempotent(p);
    }
    return w;
  }

  /// An exact zero divisor z e_k.
  Bicomplexd null_cone_value() {
    const double a = uniform(-10, 10);
    const double b = uniform(-10, 10);
    const auto k = chance(0.5) ? Idempotent::e1 : Idempotent::e2;
    return Bicomplexd(std::complex<double>(a, b)) * Bicomplexd::e(k);
  }

  std::complex<double> complex() {
    const double a = uniform(-10, 10);
    const double b = uniform(-10, 10);
    return {a, b};
  }

  Ketd ket(Eigen::Index n, bool inject = true) {
    Ketd psi(n);
    for (Eigen::Index l = 0; l < n; ++l) psi[l] = bicomplex(inject);
    return psi;
  }

  Eigen::VectorXd weights(Eigen::Index n, double lo, double hi) {
    Eigen::VectorXd w(n);
    for (Eigen::Index l = 0; l < n; ++l) w[l] = log_uniform(lo, hi);
    return w;
  }

  ScalarProductSpec<double> space(Eigen::Index n, double lo, double hi) {
    auto w1 = weights(n, lo, hi);
    auto w2 = weights(n, lo, hi);
    return {std::move(w1), std::move(w2)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bihilbert::verify::detail
