#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftgeom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: syntax, unknown symbol, bad file.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input on which the operation is not defined.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EmptyShiftError : public PreconditionError {
 public:
  EmptyShiftError() : PreconditionError("shift is empty") {}
  using PreconditionError::PreconditionError;
};

class NotMixingError : public PreconditionError {
 public:
  explicit NotMixingError(std::size_t period)
      : PreconditionError("shift is not mixing (period " + std::to_string(period) + ")"),
        period_(period) {}
  std::size_t period() const { return period_; }

 private:
  std::size_t period_;
};

// A search or enumeration exceeded its configured cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftgeom
