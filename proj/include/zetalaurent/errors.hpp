#pragma once

#include <stdexcept>
#include <string>

namespace zl {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two truncated series of different order were combined.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

// Reciprocal of a series whose constant term is zero.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

// The requested precision cannot separate truncation error from rounding,
// or a cancellation sentinel detected unstable digits.
class PrecisionInfeasibleError : public Error {
 public:
  using Error::Error;
};

// Coefficient table too short, wrong convention, or otherwise unusable.
class TableError : public Error {
 public:
  using Error::Error;
};

// Malformed decimal string, rational string, or table file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zl
