#pragma once

#include <stdexcept>
#include <string>

namespace pl2 {

// Argument outside an operation's admissible domain (|z| >= 1, sigma <= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series or quadrature could not reach the requested tolerance within the
// configured budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Leading coefficient too small to invert against.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural precondition violated (coprimality, dimension mismatch, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pl2
