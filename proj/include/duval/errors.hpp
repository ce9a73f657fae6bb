#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duval {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class NotWellFormed : public Error {
 public:
  using Error::Error;
};

class NotQuasismooth : public Error {
 public:
  using Error::Error;
};

class NoLinkingMonomial : public Error {
 public:
  using Error::Error;
};

/// A quotient singularity on the general member that is not a rational double point
/// (or a whole singular curve lying on it).
class NotDuVal : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class BasketPointCountMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a basket exceeds the bound of 19 exceptional curves.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace duval
