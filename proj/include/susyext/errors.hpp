#pragma once

#include <stdexcept>
#include <string>

namespace susyext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter record was constructed with a value violating its invariant.
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the mathematical domain of a formula (log of Q <= 0, r <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested level n is not a bound state (n >= A).
class LevelError : public Error {
 public:
  using Error::Error;
};

/// Sampled input does not decay at the grid ends.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// Zero or underflowing input where a nonzero norm is required.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace susyext
