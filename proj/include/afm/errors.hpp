#pragma once

#include <stdexcept>
#include <string>

namespace afm {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation produced a non-real or non-finite intermediate value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The requested level is not bound for the given coupling.
class NoBoundState : public Error {
 public:
  using Error::Error;
};

// An iterative solver did not converge to the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The power lambda has no branch prescription for the general AFM formula.
class UnsupportedLambda : public Error {
 public:
  using Error::Error;
};

// A chi-square measure had no qualifying term.
class EmptySum : public Error {
 public:
  using Error::Error;
};

// Least-squares design matrix is rank deficient.
class SingularFit : public Error {
 public:
  using Error::Error;
};

}  // namespace afm
