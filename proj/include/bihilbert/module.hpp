#pragma once

// Finite bicomplex modules M = V1 (+) V2 and their scalar products.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Core>

#include "bihilbert/bicomplex.hpp"
#include "bihilbert/eigen_support.hpp"

namespace bihilbert {

/// A ket of a finite free module: one bicomplex coefficient per coordinate.
template <typename T>
using Ket = Eigen::Matrix<Bicomplex<T>, Eigen::Dynamic, 1>;

/// Coordinates of e_k |psi> in the complex vector space V_k.
template <typename T>
using ComponentVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

template <typename T>
using WeightVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Ketd = Ket<double>;

/// Defines the bicomplex scalar product through two diagonal positive-weighted
/// standard products, (x, y)_k = sum_l w_{k,l} conj(x_l) y_l on V_k.
template <typename T>
class ScalarProductSpec {
 public:
  /// Unit weights in both components.
  explicit ScalarProductSpec(Eigen::Index dim) {
    if (dim <= 0) throw InvalidArgument("module dimension must be positive");
    w1_ = WeightVector<T>::Ones(dim);
    w2_ = WeightVector<T>::Ones(dim);
  }

  ScalarProductSpec(WeightVector<T> w1, WeightVector<T> w2) : w1_(std::move(w1)), w2_(std::move(w2)) {
    if (w1_.size() == 0) throw InvalidArgument("module dimension must be positive");
    if (w1_.size() != w2_.size()) {
      throw DimensionMismatch("weight lists have lengths " + std::to_string(w1_.size()) + " and " +
                              std::to_string(w2_.size()));
    }
    for (const auto* w : {&w1_, &w2_}) {
      for (Eigen::Index l = 0; l < w->size(); ++l) {
        if (!std::isfinite((*w)[l]) || !((*w)[l] > T(0))) {
          throw InvalidArgument("scalar-product weights must be finite and positive");
        }
      }
    }
  }

  Eigen::Index dim() const { return w1_.size(); }
  const WeightVector<T>& w1() const { return w1_; }
  const WeightVector<T>& w2() const { return w2_; }
  const WeightVector<T>& weights(Idempotent k) const { return k == Idempotent::e1 ? w1_ : w2_; }

  T max_weight() const { return std::max(w1_.maxCoeff(), w2_.maxCoeff()); }
  T min_weight() const { return std::min(w1_.minCoeff(), w2_.minCoeff()); }

  bool operator==(const ScalarProductSpec& o) const { return w1_ == o.w1_ && w2_ == o.w2_; }

 private:
  WeightVector<T> w1_;
  WeightVector<T> w2_;
};

template <typename T>
void require_dim(const ScalarProductSpec<T>& spec, Eigen::Index n) {
  if (n != spec.dim()) {
    throw DimensionMismatch("ket has dimension " + std::to_string(n) + ", space has dimension " +
                            std::to_string(spec.dim()));
  }
}

template <typename T>
bool is_finite(const Ket<T>& psi) {
  for (Eigen::Index l = 0; l < psi.size(); ++l) {
    if (!is_finite(psi[l])) return false;
  }
  return true;
}

template <typename T>
ComponentVector<T> component(const Ket<T>& psi, Idempotent k) {
  return psi.unaryExpr([k](const Bicomplex<T>& w) { return project(w, k); });
}

/// Inverse of component(): builds v1 e1 + v2 e2 coefficientwise.
template <typename T>
Ket<T> compose(const ComponentVector<T>& v1, const ComponentVector<T>& v2) {
  if (v1.size() != v2.size()) throw DimensionMismatch("component vectors differ in length");
  Ket<T> psi(v1.size());
  for (Eigen::Index l = 0; l < v1.size(); ++l) psi[l] = from_idempotent(v1[l], v2[l]);
  return psi;
}

/// |psi_k> = e_k |psi>.
template <typename T>
Ket<T> split(const Ket<T>& psi, Idempotent k) {
  return psi * Bicomplex<T>::e(k);
}

/// The standard weighted product on one V_k.
template <typename T>
std::complex<T> component_product(const WeightVector<T>& weights, const ComponentVector<T>& x,
                                  const ComponentVector<T>& y) {
  return weights.template cast<std::complex<T>>().cwiseProduct(x).dot(y);
}

/// <psi, phi> = e1 (psi_1, phi_1)_1 + e2 (psi_2, phi_2)_2, conjugate-linear
/// (under dag3) in the first slot.
template <typename T>
Bicomplex<T> scalar_product(const ScalarProductSpec<T>& spec, const Ket<T>& psi, const Ket<T>& phi) {
  require_dim(spec, psi.size());
  require_dim(spec, phi.size());
  return from_idempotent(
      component_product(spec.w1(), component(psi, Idempotent::e1), component(phi, Idempotent::e1)),
      component_product(spec.w2(), component(psi, Idempotent::e2), component(phi, Idempotent::e2)));
}

/// <psi, psi> evaluated directly in idempotent coordinates; both entries are
/// sums of nonnegative terms.
template <typename T>
Hyperbolic<T> self_product(const ScalarProductSpec<T>& spec, const Ket<T>& psi) {
  require_dim(spec, psi.size());
  return {(spec.w1().array() * component(psi, Idempotent::e1).array().abs2()).sum(),
          (spec.w2().array() * component(psi, Idempotent::e2).array().abs2()).sum()};
}

/// ||psi|| = (1/sqrt 2) sqrt((psi_1, psi_1)_1 + (psi_2, psi_2)_2).
template <typename T>
T induced_norm(const ScalarProductSpec<T>& spec, const Ket<T>& psi) {
  const auto h = self_product(spec, psi);
  return std::sqrt((h.x1 + h.x2) / T(2));
}

/// Norms at or below this are treated as the zero ket.
template <typename T>
T zero_ket_threshold(const ScalarProductSpec<T>& spec) {
  return T(1e-12) * std::sqrt(T(spec.dim())) * spec.max_weight();
}

template <typename T>
bool is_zero_ket(const ScalarProductSpec<T>& spec, const Ket<T>& psi) {
  return induced_norm(spec, psi) <= zero_ket_threshold(spec);
}

/// c with max_l |psi_l| <= c ||psi|| for every ket of the space.
template <typename T>
T coefficient_bound(const ScalarProductSpec<T>& spec) {
  return T(1) / std::sqrt(spec.min_weight());
}

}  // namespace bihilbert
