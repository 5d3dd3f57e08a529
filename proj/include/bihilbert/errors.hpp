#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihilbert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs an invertible value but got a zero divisor.
class NullConeError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidPrefix : public Error {
 public:
  using Error::Error;
};

/// Gram-Schmidt hit a residual whose self-product lies in the null cone.
/// `index()` is the position of the offending input ket.
class NullConeBreakdown : public Error {
 public:
  explicit NullConeBreakdown(std::size_t index)
      : Error("null-cone breakdown at input ket " + std::to_string(index)), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

}  // namespace bihilbert
