#pragma once

#include <stdexcept>
#include <string>

namespace seedwave {

/// Reason codes for input validation failures. Each precondition violation
/// maps to its own code so callers (and tests) can tell them apart.
enum class errc {
  sequence_too_short,
  nonfinite_value,
  nonpositive_delta,
  nonpositive_variance,
  parity,
  not_centered,
  order_out_of_range,
  matrix_bounds,
  order_exceeds_length,
  wing_length_mismatch,
  dimension_mismatch,
  nonpositive_scale,
  bad_grid,
  bad_step,
  bad_config,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  ValidationError(errc code, const std::string& what) : Error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Zero-mean hypothesis violated where the admissible condition is required.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that carries no information (e.g. all-zero seed).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivision depth. Carries the best
/// available estimate so callers can still inspect it.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double value, double error_estimate)
      : Error(what), value_(value), error_estimate_(error_estimate) {}
  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace seedwave
