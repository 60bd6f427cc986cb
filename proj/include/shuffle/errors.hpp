#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shuffle {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A variable carrying a negative exponent was mapped to a non-monomial.
class NonInvertibleImage : public Error {
 public:
  using Error::Error;
};

class ArityTooSmall : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A polynomial used as an element of V_k is not symmetric in z1..zk.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A closed-form identity failed to hold; indicates a kernel fault.
class IdentityViolated : public Error {
 public:
  using Error::Error;
};

/// The target does not lie in the ideal (g1, g2).
class NotInIdeal : public Error {
 public:
  using Error::Error;
};

/// Malformed certificate document.
class FormatError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at offset " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace shuffle
