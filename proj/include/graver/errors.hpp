#pragma once

#include <stdexcept>
#include <string>

namespace graver {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible length or an index out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A vector was required to lie in a lattice and does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (e.g. sign of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Fixed-width arithmetic would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Well-formed input that violates a semantic constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace graver
