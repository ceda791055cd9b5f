#pragma once

#include <stdexcept>
#include <string>

namespace gtrans {

/// Bad user input: malformed files, invalid parameters, graph constraints.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not meet its contract (non-convergence,
/// violated spectral bounds, exhausted search budgets).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gtrans
