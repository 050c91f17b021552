#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "seedwave/detail.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/matrix.hpp"
#include "seedwave/wavelet.hpp"

namespace seedwave {

/// Wavelet coefficients over a scale x shift grid. Row i holds scale
/// scales[i] across all shifts.
struct CwtGrid {
  std::vector<double> scales;
  std::vector<double> shifts;
  Matrix coefficients;  // |scales| x |shifts|
  double signal_delta = 0.0;
};

/// L2-normalized dilated/shifted family member: (1/sqrt(a)) Psi((t - b)/a).
inline double dilate_shift(const SeedWavelet& w, double a, double b, double t) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw ValidationError(errc::nonpositive_scale, "scale a must be finite and > 0");
  }
  if (!std::isfinite(b)) {
    throw ValidationError(errc::nonfinite_value, "shift b must be finite");
  }
  return w.evaluate((t - b) / a) / std::sqrt(a);
}

/// Riemann-sum continuous wavelet transform of a uniformly sampled signal
/// (sample i at time i*signal_delta):
///   coefficient(a, b) = signal_delta * sum_i signal[i] * (1/sqrt(a)) Psi((i*signal_delta - b)/a).
/// Linear in the signal; O(signal_delta) discretization error.
inline CwtGrid cwt(std::span<const double> signal, double signal_delta, const SeedWavelet& w,
                   std::vector<double> scales, std::vector<double> shifts) {
  if (signal.empty()) {
    throw ValidationError(errc::sequence_too_short, "signal must be non-empty");
  }
  if (!detail::all_finite(signal)) {
    throw ValidationError(errc::nonfinite_value, "signal values must all be finite");
  }
  if (!std::isfinite(signal_delta) || signal_delta <= 0.0) {
    throw ValidationError(errc::nonpositive_delta, "signal_delta must be finite and > 0");
  }
  if (scales.empty() || shifts.empty()) {
    throw ValidationError(errc::dimension_mismatch, "scales and shifts must be non-empty");
  }
  for (double a : scales) {
    if (!std::isfinite(a) || a <= 0.0) {
      throw ValidationError(errc::nonpositive_scale, "all scales must be finite and > 0");
    }
  }
  if (!detail::all_finite(shifts)) {
    throw ValidationError(errc::nonfinite_value, "all shifts must be finite");
  }

  CwtGrid grid;
  grid.signal_delta = signal_delta;
  grid.coefficients = Matrix(scales.size(), shifts.size());
  for (std::size_t si = 0; si < scales.size(); ++si) {
    const double a = scales[si];
    const double root = std::sqrt(a);
    for (std::size_t bi = 0; bi < shifts.size(); ++bi) {
      const double b = shifts[bi];
      double acc = 0.0;
      for (std::size_t i = 0; i < signal.size(); ++i) {
        const double t = static_cast<double>(i) * signal_delta;
        acc += signal[i] * w.evaluate((t - b) / a);
      }
      grid.coefficients(si, bi) = signal_delta * acc / root;
    }
  }
  grid.scales = std::move(scales);
  grid.shifts = std::move(shifts);
  return grid;
}

}  // namespace seedwave
