#pragma once

#include <stdexcept>
#include <string>

namespace zolo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (zero modulus, v not dividing L, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// ord_L(n) requested with gcd(n, L) > 1.
class OrderUndefined : public Error {
 public:
  using Error::Error;
};

class CoprimalityRequired : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

/// Too few Taylor terms to pin down a rational function.
class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

/// The rational function does not lie in any R(L, kappa).
class NotInRLkappa : public Error {
 public:
  using Error::Error;
};

/// A closed-form identity disagreed with its independent computation.
/// These must never fire; the CLI maps them to exit code 3.
class InternalViolation : public Error {
 public:
  using Error::Error;
};

class InternalFormulaViolation : public InternalViolation {
 public:
  using InternalViolation::InternalViolation;
};

class InternalTheoremViolation : public InternalViolation {
 public:
  using InternalViolation::InternalViolation;
};

}  // namespace zolo
