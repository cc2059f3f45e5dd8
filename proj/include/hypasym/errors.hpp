#pragma once

#include <stdexcept>
#include <string>

namespace hypasym {

// Malformed literal or command-line value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive precision would exceed the configured ceiling.
class PrecisionCeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point was handed to an approximant built for a different regime.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature refinement did not stabilize.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypasym
