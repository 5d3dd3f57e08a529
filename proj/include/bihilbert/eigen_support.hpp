#pragma once

// Lets Eigen dense types carry bicomplex coefficients.

#include <Eigen/Core>

#include "bihilbert/bicomplex.hpp"

namespace Eigen {

template <typename T>
struct NumTraits<bihilbert::Bicomplex<T>> : GenericNumTraits<bihilbert::Bicomplex<T>> {
  using Real = typename NumTraits<T>::Real;
  using NonInteger = bihilbert::Bicomplex<T>;
  using Literal = bihilbert::Bicomplex<T>;
  using Nested = bihilbert::Bicomplex<T>;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4 * NumTraits<T>::ReadCost,
    AddCost = 4 * NumTraits<T>::AddCost,
    MulCost = 16 * NumTraits<T>::MulCost + 12 * NumTraits<T>::AddCost
  };

  static inline Real epsilon() { return NumTraits<T>::epsilon(); }
  static inline Real dummy_precision() { return NumTraits<T>::dummy_precision(); }
  static inline int digits10() { return NumTraits<T>::digits10(); }
};

template <typename T, typename BinaryOp>
struct ScalarBinaryOpTraits<bihilbert::Bicomplex<T>, T, BinaryOp> {
  using ReturnType = bihilbert::Bicomplex<T>;
};

template <typename T, typename BinaryOp>
struct ScalarBinaryOpTraits<T, bihilbert::Bicomplex<T>, BinaryOp> {
  using ReturnType = bihilbert::Bicomplex<T>;
};

}  // namespace Eigen
