#pragma once

#include <stdexcept>
#include <string>

namespace acyclic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant (commutativity, d^2 = 0, equivariance, ...) failed.
/// The message names the violated identity and a witness.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace acyclic

namespace acyclic {

/// A parameter is outside the operation's domain (level > ambient, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace acyclic
