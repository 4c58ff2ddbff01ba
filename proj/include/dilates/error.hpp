#pragma once

#include <stdexcept>
#include <string>

namespace dilates {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value left the signed 64-bit range, or a derived constant would.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a precondition: zero coefficient, bad modulus,
/// a set that is not a component, a k that is not an odd prime, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dilates
