#pragma once

// Truncated square-summable bicomplex sequences and the Riesz-Fischer map.

#include <cmath>
#include <string>
#include <utility>

#include "bihilbert/orthonormal.hpp"

namespace bihilbert {

/// A finite prefix of an l2 sequence; every entry past size() is zero.
template <typename T>
class BicomplexSequence {
 public:
  using Values = Eigen::Matrix<Bicomplex<T>, Eigen::Dynamic, 1>;

  BicomplexSequence() = default;
  explicit BicomplexSequence(Values values) : values_(std::move(values)) {}

  static BicomplexSequence zero(Eigen::Index n) { return BicomplexSequence(Values::Zero(n)); }

  const Values& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  const Bicomplex<T>& operator[](Eigen::Index l) const { return values_[l]; }

  friend BicomplexSequence operator+(const BicomplexSequence& a, const BicomplexSequence& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sequence lengths differ");
    return BicomplexSequence(a.values_ + b.values_);
  }
  friend BicomplexSequence operator-(const BicomplexSequence& a, const BicomplexSequence& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sequence lengths differ");
    return BicomplexSequence(a.values_ - b.values_);
  }
  friend BicomplexSequence operator*(const Bicomplex<T>& s, const BicomplexSequence& a) {
    return BicomplexSequence(a.values_ * s);
  }

 private:
  Values values_;
};

/// ||{w_l}||_2 = (sum |w_l|^2)^(1/2) with the Euclidean R^4 norm per entry.
template <typename T>
T l2_norm(const BicomplexSequence<T>& s) {
  T acc(0);
  for (Eigen::Index l = 0; l < s.size(); ++l) {
    acc += std::norm(s[l].z1()) + std::norm(s[l].z2());
  }
  return std::sqrt(acc);
}

/// Entrywise idempotent coordinate: {z1l - z2l i1} for e1, {z1l + z2l i1} for e2.
template <typename T>
ComponentVector<T> sequence_split(const BicomplexSequence<T>& s, Idempotent k) {
  return s.values().unaryExpr([k](const Bicomplex<T>& w) { return project(w, k); });
}

template <typename T>
BicomplexSequence<T> sequence_from_components(const ComponentVector<T>& c1, const ComponentVector<T>& c2) {
  return BicomplexSequence<T>(compose(c1, c2));
}

/// The module norm of e1 l2 (+) e2 l2 built from the two classical l2 norms.
template <typename T>
T split_norm(const BicomplexSequence<T>& s) {
  return std::sqrt((sequence_split(s, Idempotent::e1).squaredNorm() +
                    sequence_split(s, Idempotent::e2).squaredNorm()) /
                   T(2));
}

/// The unit-weight scalar product that makes l2 a bicomplex Hilbert space.
template <typename T>
Bicomplex<T> l2_scalar_product(const BicomplexSequence<T>& s, const BicomplexSequence<T>& t) {
  if (s.size() != t.size()) throw DimensionMismatch("sequence lengths differ");
  if (s.size() == 0) return {};
  return scalar_product(ScalarProductSpec<T>(s.size()), s.values(), t.values());
}

/// T: |psi> -> {<m_l, psi>} for a full orthonormal basis {m_l}.
template <typename T>
class RieszFischerMap {
 public:
  explicit RieszFischerMap(OrthonormalSystem<T> basis) : basis_(std::move(basis)) {
    if (!basis_.is_full_basis()) {
      throw DimensionMismatch("Riesz-Fischer map needs a full basis: " + std::to_string(basis_.size()) +
                              " members for dimension " + std::to_string(basis_.space().dim()));
    }
  }

  const OrthonormalSystem<T>& basis() const { return basis_; }
  Eigen::Index dim() const { return basis_.space().dim(); }

  BicomplexSequence<T> forward(const Ket<T>& psi) const {
    return BicomplexSequence<T>(fourier_coefficients(basis_, psi));
  }

  Ket<T> inverse(const BicomplexSequence<T>& s) const {
    if (s.size() != dim()) {
      throw DimensionMismatch("sequence has length " + std::to_string(s.size()) + ", basis has " +
                              std::to_string(dim()) + " members");
    }
    return expand(basis_, s.values());
  }

  /// T_k(psi) = e_k T(psi).
  BicomplexSequence<T> component(const Ket<T>& psi, Idempotent k) const {
    return Bicomplex<T>::e(k) * forward(psi);
  }

 private:
  OrthonormalSystem<T> basis_;
};

template <typename T>
BicomplexSequence<T> rf_forward(const RieszFischerMap<T>& map, const Ket<T>& psi) {
  return map.forward(psi);
}

template <typename T>
Ket<T> rf_inverse(const RieszFischerMap<T>& map, const BicomplexSequence<T>& s) {
  return map.inverse(s);
}

template <typename T>
BicomplexSequence<T> rf_component(const RieszFischerMap<T>& map, const Ket<T>& psi, Idempotent k) {
  return map.component(psi, k);
}

}  // namespace bihilbert
