#pragma once

#include <stdexcept>
#include <string>

namespace resonax {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (shape, sign, size, JSON).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The action has nonconstant invariant polynomials, so weight spaces are infinite.
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

/// A value left the range of the machine integers used for exponents.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling cannot make progress on the given domain.
class DegenerateDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace resonax
