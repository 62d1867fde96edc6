#pragma once

#include <stdexcept>
#include <string>

namespace qcollide {

// Operand shapes don't fit together (non-square, mismatched dimensions, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to converge or produced a non-finite result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state or parameter violates a physical constraint: positivity, unit trace,
// Hermiticity, an uncertainty bound.
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Fock-space truncation is too small for the requested state.
// required_levels is an estimate of a sufficient n_levels.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_levels)
      : std::runtime_error(what), required_levels(required_levels) {}

  int required_levels;
};

// Configuration parsing or validation failure.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcollide
