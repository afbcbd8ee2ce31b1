#pragma once

#include <stdexcept>
#include <string>

namespace tac {

/// Caller supplied a value outside an operation's domain (bad spin, bad
/// precision, mismatched dimensions). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested data is not part of a reference table.
class NotAvailable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A result that must hold exactly failed to (e.g. a non-integral
/// characteristic polynomial coefficient). Always a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Root finder produced a root incompatible with a Hermitian spectrum.
class SpectralConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative numerics failed to converge. CLI exit code 3.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// Interpolation nodes too close for the requested precision.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tac
