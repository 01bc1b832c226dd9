#pragma once

#include <stdexcept>
#include <string>

namespace syk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient beyond the known truncation order was requested.
class OutOfKnownRange : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Series matrix inversion requires the constant term to be the identity.
class NotUnitriangularConstantTerm : public Error {
 public:
  using Error::Error;
};

/// A verification suite was asked to run on a composition it does not apply to.
class WrongShape : public Error {
 public:
  using Error::Error;
};

class DegreeExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace syk
