#pragma once

#include <stdexcept>
#include <string>

namespace kostant {

/// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankTooSmall : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSupport : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroDistribution : public Error {
 public:
  using Error::Error;
};

class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

// Raised when an s- or sqrt(5)-component that must cancel does not.
class InternalCancellationFailure : public Error {
 public:
  using Error::Error;
};

class NonRationalResult : public Error {
 public:
  using Error::Error;
};

}  // namespace kostant
