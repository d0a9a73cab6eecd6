#pragma once

#include <stdexcept>
#include <string>

namespace fcqec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadQubitIndex : public Error {
 public:
  using Error::Error;
};

class BadQubitCount : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the Hermitian / unit-trace / PSD checks.
class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidProbabilities : public Error {
 public:
  using Error::Error;
};

class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

/// Ancilla dimension does not match the parity of the register.
class AncillaSizeError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fcqec
