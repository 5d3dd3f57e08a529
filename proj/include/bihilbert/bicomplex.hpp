#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include "bihilbert/errors.hpp"

namespace bihilbert {

// The algebra is exact; these thresholds only decide how close to a
// boundary a computed value may sit before it is classified as on it.
namespace tolerance {
inline constexpr double null_cone = 1e-12;     // relative to max(|h1|, |h2|, 1)
inline constexpr double d_plus_slack = 1e-12;  // absolute
}  // namespace tolerance

enum class Conjugation { dag1, dag2, dag3 };
enum class Modulus { i1, i2, j };
enum class Idempotent { e1 = 1, e2 = 2 };

/// Complex numbers in the first imaginary unit, the scalar field of the
/// idempotent components.
template <typename T>
using ComplexI1 = std::complex<T>;

/// w = h1 e1 + h2 e2.
template <typename T>
struct IdempotentPair {
  ComplexI1<T> h1;
  ComplexI1<T> h2;

  const ComplexI1<T>& operator[](Idempotent k) const { return k == Idempotent::e1 ? h1 : h2; }
  ComplexI1<T>& operator[](Idempotent k) { return k == Idempotent::e1 ? h1 : h2; }

  bool operator==(const IdempotentPair&) const = default;
};

/// A bicomplex number w = z1 + z2 i2 with z1, z2 in C(i1).
///
/// Storage is Cartesian. The idempotent coordinates are derived on demand
/// through to_idempotent(), so there is a single source of truth.
template <typename T>
class Bicomplex {
 public:
  using Scalar = T;
  using Complex = ComplexI1<T>;

  constexpr Bicomplex() = default;
  constexpr Bicomplex(T re) : z1_(re) {}  // NOLINT: reals embed implicitly
  constexpr Bicomplex(const Complex& z1, const Complex& z2 = Complex()) : z1_(z1), z2_(z2) {}

  constexpr const Complex& z1() const { return z1_; }
  constexpr const Complex& z2() const { return z2_; }

  static constexpr Bicomplex one() { return Bicomplex(T(1)); }
  static constexpr Bicomplex i1() { return {Complex(0, 1), Complex(0, 0)}; }
  static constexpr Bicomplex i2() { return {Complex(0, 0), Complex(1, 0)}; }
  static constexpr Bicomplex j() { return {Complex(0, 0), Complex(0, 1)}; }
  static constexpr Bicomplex e1() { return {Complex(T(0.5), 0), Complex(0, T(0.5))}; }
  static constexpr Bicomplex e2() { return {Complex(T(0.5), 0), Complex(0, T(-0.5))}; }
  static constexpr Bicomplex e(Idempotent k) { return k == Idempotent::e1 ? e1() : e2(); }

  Bicomplex operator-() const { return {-z1_, -z2_}; }
  Bicomplex operator+() const { return *this; }

  Bicomplex& operator+=(const Bicomplex& t) {
    z1_ += t.z1_;
    z2_ += t.z2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& t) {
    z1_ -= t.z1_;
    z2_ -= t.z2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& t) { return *this = *this * t; }
  Bicomplex& operator*=(T a) {
    z1_ *= a;
    z2_ *= a;
    return *this;
  }

  friend Bicomplex operator+(Bicomplex s, const Bicomplex& t) { return s += t; }
  friend Bicomplex operator-(Bicomplex s, const Bicomplex& t) { return s -= t; }

  // (z1 + z2 i2)(z1' + z2' i2) with i2^2 = -1.
  friend Bicomplex operator*(const Bicomplex& s, const Bicomplex& t) {
    return {s.z1_ * t.z1_ - s.z2_ * t.z2_, s.z1_ * t.z2_ + s.z2_ * t.z1_};
  }
  friend Bicomplex operator*(Bicomplex s, T a) { return s *= a; }
  friend Bicomplex operator*(T a, Bicomplex s) { return s *= a; }

  bool operator==(const Bicomplex&) const = default;

 private:
  Complex z1_{};
  Complex z2_{};
};

using Bicomplexd = Bicomplex<double>;

namespace detail {
// Multiplication by i1 is a swap and a sign flip; keep it exact.
template <typename T>
ComplexI1<T> times_i(const ComplexI1<T>& z) {
  return {-z.imag(), z.real()};
}
}  // namespace detail

template <typename T>
bool is_finite(const Bicomplex<T>& w) {
  return std::isfinite(w.z1().real()) && std::isfinite(w.z1().imag()) &&
         std::isfinite(w.z2().real()) && std::isfinite(w.z2().imag());
}

/// h1 = z1 - z2 i1, h2 = z1 + z2 i1.
template <typename T>
IdempotentPair<T> to_idempotent(const Bicomplex<T>& w) {
  const auto iz2 = detail::times_i(w.z2());
  return {w.z1() - iz2, w.z1() + iz2};
}

template <typename T>
Bicomplex<T> from_idempotent(const IdempotentPair<T>& p) {
  const T half(0.5);
  return {(p.h1 + p.h2) * half, detail::times_i(p.h1 - p.h2) * half};
}

template <typename T>
Bicomplex<T> from_idempotent(const ComplexI1<T>& h1, const ComplexI1<T>& h2) {
  return from_idempotent(IdempotentPair<T>{h1, h2});
}

/// The projection P_k onto the k-th idempotent coordinate.
template <typename T>
ComplexI1<T> project(const Bicomplex<T>& w, Idempotent k) {
  const auto iz2 = detail::times_i(w.z2());
  return k == Idempotent::e1 ? w.z1() - iz2 : w.z1() + iz2;
}

template <typename T>
Bicomplex<T> conj(const Bicomplex<T>& w, Conjugation k) {
  switch (k) {
    case Conjugation::dag1:
      return {std::conj(w.z1()), std::conj(w.z2())};
    case Conjugation::dag2:
      return {w.z1(), -w.z2()};
    case Conjugation::dag3:
      break;
  }
  return {std::conj(w.z1()), -std::conj(w.z2())};
}

/// |w|^2_k. The i1 value lies in C(i1), the i2 value in C(i2) (carried in the
/// real part of z1 and the real part of z2), and the j value in D+.
template <typename T>
Bicomplex<T> modulus_sq(const Bicomplex<T>& w, Modulus k) {
  switch (k) {
    case Modulus::i1:
      return w * conj(w, Conjugation::dag2);
    case Modulus::i2:
      return w * conj(w, Conjugation::dag1);
    case Modulus::j:
      break;
  }
  return w * conj(w, Conjugation::dag3);
}

/// Euclidean R^4 norm sqrt(|z1|^2 + |z2|^2).
template <typename T>
T euclid_norm(const Bicomplex<T>& w) {
  return std::sqrt(std::norm(w.z1()) + std::norm(w.z2()));
}

/// The same norm evaluated from the idempotent coordinates.
template <typename T>
T idempotent_norm(const Bicomplex<T>& w) {
  const auto p = to_idempotent(w);
  return std::sqrt((std::norm(p.h1) + std::norm(p.h2)) / T(2));
}

template <typename T>
bool is_null_cone(const Bicomplex<T>& w, T tol = T(tolerance::null_cone)) {
  const auto p = to_idempotent(w);
  const T a1 = std::abs(p.h1);
  const T a2 = std::abs(p.h2);
  return std::min(a1, a2) <= tol * std::max({a1, a2, T(1)});
}

/// w^-1 = h1^-1 e1 + h2^-1 e2. Throws NullConeError for zero divisors.
template <typename T>
Bicomplex<T> inverse(const Bicomplex<T>& w, T tol = T(tolerance::null_cone)) {
  const auto p = to_idempotent(w);
  const T limit = tol * euclid_norm(w);
  if (std::abs(p.h1) <= limit || std::abs(p.h2) <= limit) {
    throw NullConeError("bicomplex value is a zero divisor and has no inverse");
  }
  return from_idempotent<T>(T(1) / p.h1, T(1) / p.h2);
}

template <typename T>
Bicomplex<T> operator/(const Bicomplex<T>& s, const Bicomplex<T>& t) {
  return s * inverse(t);
}

namespace detail {
template <typename T>
ComplexI1<T> complex_root(const ComplexI1<T>& z, int n, int branch) {
  if (z == ComplexI1<T>()) return {};
  if (n == 1) return z;
  if (n == 2 && branch % 2 == 0) return std::sqrt(z);
  const T r = std::pow(std::abs(z), T(1) / T(n));
  const T theta = (std::arg(z) + T(2) * std::numbers::pi_v<T> * T(branch)) / T(n);
  return std::polar(r, theta);
}
}  // namespace detail

/// An n-th root built from one complex root per idempotent coordinate.
/// Branch 0 is the principal root; branches 0..n-1 in each coordinate give
/// all n^2 roots.
template <typename T>
Bicomplex<T> nth_root(const Bicomplex<T>& w, int n, int branch1 = 0, int branch2 = 0) {
  if (n < 1) throw InvalidArgument("root order must be positive");
  const auto p = to_idempotent(w);
  return from_idempotent(detail::complex_root(p.h1, n, branch1),
                         detail::complex_root(p.h2, n, branch2));
}

template <typename T>
Bicomplex<T> sqrt(const Bicomplex<T>& w) {
  return nth_root(w, 2);
}

/// Integer power by repeated squaring; negative exponents go through inverse().
template <typename T>
Bicomplex<T> pow(Bicomplex<T> w, long n) {
  if (n < 0) {
    w = inverse(w);
    n = -n;
  }
  Bicomplex<T> acc = Bicomplex<T>::one();
  while (n > 0) {
    if (n & 1) acc *= w;
    w *= w;
    n >>= 1;
  }
  return acc;
}

/// A hyperbolic number x1 e1 + x2 e2.
template <typename T>
struct Hyperbolic {
  T x1{};
  T x2{};

  /// Keeps the real parts of the idempotent coordinates of w.
  static Hyperbolic from(const Bicomplex<T>& w) {
    const auto p = to_idempotent(w);
    return {p.h1.real(), p.h2.real()};
  }

  Bicomplex<T> to_bicomplex() const { return from_idempotent<T>(x1, x2); }

  bool operator==(const Hyperbolic&) const = default;
};

template <typename T>
bool in_d_plus(const Hyperbolic<T>& h, T slack = T(tolerance::d_plus_slack)) {
  return h.x1 >= -slack && h.x2 >= -slack;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Bicomplex<T>& w) {
  return os << '(' << w.z1().real() << (w.z1().imag() < 0 ? "-" : "+") << std::abs(w.z1().imag())
            << "i1) + (" << w.z2().real() << (w.z2().imag() < 0 ? "-" : "+")
            << std::abs(w.z2().imag()) << "i1)i2";
}

}  // namespace bihilbert
