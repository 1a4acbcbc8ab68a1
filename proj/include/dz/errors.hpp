#pragma once

#include <stdexcept>
#include <string>

namespace dz {

// Invalid argument outside an operation's domain (q = 0, a out of (0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation requested at (or too close to) a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Base for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Phase increments between samples too large to follow a continuous branch.
class BranchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A zero sits on an integration contour even after perturbation.
class BoundaryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Winding accumulation did not settle on an integer.
class PrecisionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace dz
