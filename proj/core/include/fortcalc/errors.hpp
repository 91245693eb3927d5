#pragma once

#include <stdexcept>
#include <string>

namespace fortcalc {

// Bad user input: a field out of range, an unknown preset or config key.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation requested at (or numerically at) a singular frequency, e.g. Δ = 0.
class ResonanceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical oracle cannot be run for the requested parameters.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

}  // namespace fortcalc
