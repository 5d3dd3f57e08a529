#pragma once

// Orthonormal systems, Fourier expansion and best approximation.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bihilbert/module.hpp"

namespace bihilbert {

/// Fourier coefficients <m_l, psi> or free coefficients alpha_l.
template <typename T>
using CoefficientList = Eigen::Matrix<Bicomplex<T>, Eigen::Dynamic, 1>;

template <typename T>
class OrthonormalSystem {
 public:
  OrthonormalSystem(ScalarProductSpec<T> space, std::vector<Ket<T>> kets)
      : space_(std::move(space)), kets_(std::move(kets)) {
    if (static_cast<Eigen::Index>(kets_.size()) > space_.dim()) {
      throw DimensionMismatch("orthonormal system has more members than the space dimension");
    }
    for (const auto& m : kets_) require_dim(space_, m.size());
  }

  const ScalarProductSpec<T>& space() const { return space_; }
  const std::vector<Ket<T>>& kets() const { return kets_; }
  std::size_t size() const { return kets_.size(); }
  const Ket<T>& operator[](std::size_t l) const { return kets_[l]; }
  bool is_full_basis() const { return static_cast<Eigen::Index>(kets_.size()) == space_.dim(); }

 private:
  ScalarProductSpec<T> space_;
  std::vector<Ket<T>> kets_;
};

/// max_{i,j} |<m_i, m_j> - delta_ij|.
template <typename T>
T orthonormality_defect(const OrthonormalSystem<T>& sys) {
  T worst(0);
  for (std::size_t a = 0; a < sys.size(); ++a) {
    for (std::size_t b = 0; b < sys.size(); ++b) {
      const Bicomplex<T> delta = a == b ? Bicomplex<T>::one() : Bicomplex<T>();
      worst = std::max(worst, euclid_norm(scalar_product(sys.space(), sys[a], sys[b]) - delta));
    }
  }
  return worst;
}

/// Relative cutoff on the residual self-product used by gram_schmidt().
inline constexpr double breakdown_tolerance = 1e-10;

/// Modified Gram-Schmidt with one reorthogonalization pass, carried out in
/// bicomplex arithmetic. Every step acts on the two idempotent components
/// independently, so each prefix keeps its V1 and V2 spans.
///
/// Normalization divides by the principal square root of <r, r>, which makes
/// each output's self-product exactly 1 in both components. A residual whose
/// self-product has a component at or below
/// breakdown_tolerance * max(<in, in>_1, <in, in>_2) raises NullConeBreakdown
/// with the index of that input.
template <typename T>
OrthonormalSystem<T> gram_schmidt(const ScalarProductSpec<T>& space, std::span<const Ket<T>> inputs,
                                  T tol = T(breakdown_tolerance)) {
  std::vector<Ket<T>> out;
  out.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    require_dim(space, inputs[i].size());
    if (out.size() == static_cast<std::size_t>(space.dim())) throw NullConeBreakdown(i);

    const auto scale = self_product(space, inputs[i]);
    Ket<T> r = inputs[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) r -= q * scalar_product(space, q, r);
    }
    const auto h = self_product(space, r);
    if (std::min(h.x1, h.x2) <= tol * std::max(scale.x1, scale.x2)) throw NullConeBreakdown(i);

    const auto root = sqrt(h.to_bicomplex());
    out.push_back(r * inverse(root));
  }
  return OrthonormalSystem<T>(space, std::move(out));
}

template <typename T>
OrthonormalSystem<T> gram_schmidt(const ScalarProductSpec<T>& space, const std::vector<Ket<T>>& inputs,
                                  T tol = T(breakdown_tolerance)) {
  return gram_schmidt(space, std::span<const Ket<T>>(inputs), tol);
}

template <typename T>
CoefficientList<T> fourier_coefficients(const OrthonormalSystem<T>& sys, const Ket<T>& psi) {
  require_dim(sys.space(), psi.size());
  CoefficientList<T> c(static_cast<Eigen::Index>(sys.size()));
  for (std::size_t l = 0; l < sys.size(); ++l) {
    c[static_cast<Eigen::Index>(l)] = scalar_product(sys.space(), sys[l], psi);
  }
  return c;
}

/// sum_{l < n} c_l m_l.
template <typename T>
Ket<T> partial_sum(const OrthonormalSystem<T>& sys, const CoefficientList<T>& c, std::size_t n) {
  Ket<T> psi = Ket<T>::Zero(sys.space().dim());
  for (std::size_t l = 0; l < n; ++l) psi += sys[l] * c[static_cast<Eigen::Index>(l)];
  return psi;
}

template <typename T>
Ket<T> expand(const OrthonormalSystem<T>& sys, const CoefficientList<T>& c) {
  if (static_cast<std::size_t>(c.size()) != sys.size()) {
    throw DimensionMismatch("coefficient list has " + std::to_string(c.size()) +
                            " entries, system has " + std::to_string(sys.size()) + " members");
  }
  return partial_sum(sys, c, sys.size());
}

template <typename T>
struct Approximation {
  Ket<T> projection;
  T residual;
};

/// Projection of psi onto the first n members and the norm of what is left.
/// No other choice of coefficients gives a smaller residual.
template <typename T>
Approximation<T> best_approximation(const OrthonormalSystem<T>& sys, const Ket<T>& psi, Eigen::Index n) {
  if (n < 0 || n > static_cast<Eigen::Index>(sys.size())) {
    throw InvalidPrefix("prefix length " + std::to_string(n) + " outside [0, " +
                        std::to_string(sys.size()) + "]");
  }
  const auto c = fourier_coefficients(sys, psi);
  Ket<T> proj = partial_sum(sys, c, static_cast<std::size_t>(n));
  const T residual = induced_norm(sys.space(), Ket<T>(psi - proj));
  return {std::move(proj), residual};
}

}  // namespace bihilbert
