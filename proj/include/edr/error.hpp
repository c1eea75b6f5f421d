#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different descriptors.
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// `d` does not divide `a`.
class NotDivisible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Inverse requested for a non-unit, or two elements are not associates.
class NotUnit : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The operation is not available for this ring kind or this element pair.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// An invariant that the algorithms guarantee was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace edr
