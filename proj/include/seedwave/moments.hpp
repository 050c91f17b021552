#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "seedwave/detail.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/matrix.hpp"
#include "seedwave/quadrature.hpp"
#include "seedwave/seed_sequence.hpp"
#include "seedwave/wavelet.hpp"

namespace seedwave {

/// Moments of a centered seed wavelet and the detected vanishing order:
/// the largest p such that moments 0..p-1 are all below tolerance.
struct MomentReport {
  std::vector<double> moments;  // entry m = delta^{m+1} * sum_k k^m u(k)
  int vanishing_order = 0;
  double tolerance = 0.0;
};

/// m-th moment of Psi in closed form: integral t^m Psi(t) dt
///   = delta^{m+1} * sum_{k=-l}^{l} k^m u(k).
/// Requires a centered sequence; m in [0, 64].
inline double analytic_moment(const SeedSequence& seq, int m) {
  seq.require_centered();
  if (m < 0 || m > 64) {
    throw ValidationError(errc::order_out_of_range,
                          "moment order must be in [0, 64], got " + std::to_string(m));
  }
  const int l = seq.half_length();
  std::vector<double> terms;
  terms.reserve(seq.size());
  for (int k = -l; k <= l; ++k) {
    terms.push_back(detail::int_pow(static_cast<double>(k), m) * seq.at_offset(k));
  }
  return detail::int_pow(seq.delta(), m + 1) * detail::pairwise_sum(terms);
}

/// Scans moments m = 0, 1, ... until the first one exceeds tol relative to
/// the magnitude-aware scale delta^{m+1} * sum_k |k^m u(k)| (k^m grows fast,
/// so an absolute test would misclassify wide seeds). Capped at m = n; the
/// order bound p < n guarantees termination for exact arithmetic.
inline MomentReport vanishing_order(const SeedSequence& seq, double tol = 1e-9) {
  seq.require_centered();
  if (!(tol > 0.0)) {
    throw ValidationError(errc::bad_config, "vanishing-order tolerance must be > 0");
  }
  if (seq.max_abs() == 0.0) {
    throw DegenerateInputError("vanishing order of the all-zero sequence is undefined");
  }
  const int n = static_cast<int>(seq.size());
  const int l = seq.half_length();
  MomentReport report;
  report.tolerance = tol;
  for (int m = 0; m < n; ++m) {
    std::vector<double> terms, magnitudes;
    terms.reserve(seq.size());
    magnitudes.reserve(seq.size());
    for (int k = -l; k <= l; ++k) {
      const double term = detail::int_pow(static_cast<double>(k), m) * seq.at_offset(k);
      terms.push_back(term);
      magnitudes.push_back(std::abs(term));
    }
    const double factor = detail::int_pow(seq.delta(), m + 1);
    const double moment = factor * detail::pairwise_sum(terms);
    const double scale = factor * detail::pairwise_sum(magnitudes);
    report.moments.push_back(moment);
    if (std::abs(moment) > tol * scale) {
      report.vanishing_order = m;
      return report;
    }
  }
  report.vanishing_order = n;
  return report;
}

/// The p x (2l+1) matrix of node powers: entry (m, k) = k^m for m = 0..p-1,
/// k = -l..l, with 0^0 = 1 (the first row is all ones). Its null space is
/// exactly the set of seeds with p vanishing moments. p = 2l+1 is permitted
/// but admits only the zero seed (the full square matrix is nonsingular).
inline Matrix moment_matrix(int l, int p) {
  if (l < 1) {
    throw ValidationError(errc::matrix_bounds, "half length l must be >= 1, got " +
                                                   std::to_string(l));
  }
  if (p < 1 || p > 2 * l + 1) {
    throw ValidationError(errc::order_exceeds_length,
                          "moment matrix needs 1 <= p <= 2l+1 = " + std::to_string(2 * l + 1) +
                              ", got p = " + std::to_string(p));
  }
  Matrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(2 * l + 1));
  for (int row = 0; row < p; ++row) {
    for (int k = -l; k <= l; ++k) {
      m(static_cast<std::size_t>(row), static_cast<std::size_t>(k + l)) =
          detail::int_pow(static_cast<double>(k), row);
    }
  }
  return m;
}

/// Independent oracle for the m-th moment via the frequency-domain derivative
/// property: integral t^m Psi dt = j^m F^(m)(0). Differentiates the
/// closed-form spectrum with an order-m central difference of step h and
/// returns the real part of j^m * F^(m)(0). Time-domain quadrature is not an
/// option here (t^m Psi is not absolutely integrable for m >= 1), which is
/// why cross-checks happen in the frequency domain.
inline double moment_fd_oracle(const SeedWavelet& w, int m, double h) {
  if (m < 0 || m > 6) {
    throw ValidationError(errc::order_out_of_range,
                          "fd oracle supports moment orders 0..6, got " + std::to_string(m));
  }
  const double limit = w.band_edge() / (4.0 * m + 4.0);
  if (!(h > 0.0) || !(h < limit)) {
    throw ValidationError(errc::bad_step,
                          "fd step must satisfy 0 < h < band_edge/(4m+4) = " +
                              std::to_string(limit));
  }
  if (m == 0) return w.spectrum(0.0).real();
  const auto f = [&w](double omega) { return w.spectrum(omega); };
  const std::complex<double> deriv = central_difference(f, 0.0, m, h);
  std::complex<double> jm{1.0, 0.0};
  for (int i = 0; i < m; ++i) jm *= std::complex<double>(0.0, 1.0);
  return (jm * deriv).real();
}

}  // namespace seedwave
