#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "seedwave/errors.hpp"
#include "seedwave/quadrature.hpp"
#include "seedwave/seed_sequence.hpp"

namespace seedwave {

/// sin(x)/x with the removable singularity filled in: below |x| = 1e-4 the
/// truncated series 1 - x^2/6 + x^4/120 is used (next term < 1e-24 there).
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// A seed sequence realized as the continuous band-limited function
///   Psi(t) = sum_k u_k sinc(Omega (t - t_k)),   Omega = pi/delta.
/// Interpolates the samples at their times, is exactly zero at the other
/// sampling-grid times, and has spectrum delta * sum_k u_k e^{-i w t_k}
/// supported on [-Omega, Omega].
class SeedWavelet {
 public:
  explicit SeedWavelet(SeedSequence seed) : seed_(std::move(seed)) {}

  const SeedSequence& seed() const noexcept { return seed_; }
  double band_edge() const { return seed_.band_edge(); }

  /// [first sample time, last sample time]; outside it Psi only decays.
  std::pair<double, double> time_support() const {
    return {seed_.t0(), seed_.sample_time(static_cast<std::ptrdiff_t>(seed_.size()) - 1)};
  }

  double evaluate(double t) const {
    if (!std::isfinite(t)) {
      throw ValidationError(errc::nonfinite_value, "evaluation time must be finite");
    }
    const double omega = band_edge();
    double acc = 0.0;
    for (std::size_t k = 0; k < seed_.size(); ++k) {
      acc += seed_.values()[k] * sinc(omega * (t - seed_.sample_time(static_cast<std::ptrdiff_t>(k))));
    }
    return acc;
  }

  double operator()(double t) const { return evaluate(t); }

  /// Uniform sampling of Psi, endpoints included.
  std::vector<std::pair<double, double>> evaluate_grid(double t_start, double t_end,
                                                       int num_points) const {
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end)) {
      throw ValidationError(errc::bad_grid, "grid requires finite t_start < t_end");
    }
    if (num_points < 2) {
      throw ValidationError(errc::bad_grid, "grid requires num_points >= 2, got " +
                                                std::to_string(num_points));
    }
    const double step = (t_end - t_start) / static_cast<double>(num_points - 1);
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(num_points));
    for (int i = 0; i < num_points; ++i) {
      const double t = (i == num_points - 1) ? t_end : t_start + static_cast<double>(i) * step;
      out.emplace_back(t, evaluate(t));
    }
    return out;
  }

  /// Closed-form Fourier transform: delta * sum_k u_k e^{-i omega t_k} for
  /// |omega| <= Omega (closed band), exactly zero outside.
  std::complex<double> spectrum(double omega) const {
    if (!std::isfinite(omega)) {
      throw ValidationError(errc::nonfinite_value, "frequency must be finite");
    }
    if (std::abs(omega) > band_edge()) return {0.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < seed_.size(); ++k) {
      const double phase = -omega * seed_.sample_time(static_cast<std::ptrdiff_t>(k));
      acc += seed_.values()[k] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return seed_.delta() * acc;
  }

  /// Exact L2 norm squared, delta * sum u_k^2 (shifted sincs are orthogonal
  /// with norm^2 = delta).
  double energy() const {
    double acc = 0.0;
    for (double v : seed_.values()) acc += v * v;
    return seed_.delta() * acc;
  }

 private:
  SeedSequence seed_;
};

/// |F(omega)|^2 / omega on (0, Omega], extended by continuity to 0 at
/// omega = 0 (valid since F(0) = 0 for admissible seeds).
inline auto admissibility_integrand(const SeedWavelet& w) {
  return [w](double omega) {
    if (omega == 0.0) return 0.0;
    return std::norm(w.spectrum(omega)) / omega;
  };
}

/// Chunk count that keeps quadrature panels at or below a quarter of the
/// spectrum's fastest oscillation period 2*pi/max|t_k|.
inline int admissibility_chunks(const SeedWavelet& w) {
  const auto [lo, hi] = w.time_support();
  const double extent = std::max(std::abs(lo), std::abs(hi));
  return std::max(8, static_cast<int>(std::ceil(2.0 * extent / w.seed().delta())));
}

/// Admissibility constant C = integral_0^Omega |F(omega)|^2/omega domega,
/// finite and positive for any nonzero zero-mean seed. Throws
/// AdmissibilityError when the seed mean is not zero (the constant would
/// diverge) and DegenerateInputError for the all-zero seed.
inline double admissibility_constant(const SeedWavelet& w, const QuadratureConfig& cfg = {}) {
  if (w.seed().max_abs() == 0.0) {
    throw DegenerateInputError("admissibility constant of the zero seed is degenerate");
  }
  if (!w.seed().admissible()) {
    throw AdmissibilityError("seed sum is not zero: |sum| = " +
                             std::to_string(std::abs(w.seed().sum())) +
                             " exceeds tolerance " +
                             std::to_string(w.seed().admissible_tolerance()));
  }
  return integrate_chunked(admissibility_integrand(w), 0.0, w.band_edge(),
                           admissibility_chunks(w), cfg)
      .value;
}

/// Independent check of the closed-form energy: quadrature of Psi^2 over the
/// window [center - W, center + W] with W = 200 n delta, chunked at the
/// oscillation period so no panel can alias. The 1/t^2 tail beyond the window
/// keeps the truncation below ~1e-3 relative.
inline IntegralResult energy_quadrature(const SeedWavelet& w,
                                        const QuadratureConfig& cfg = {1e-5, 1e-12, 50}) {
  const auto [lo, hi] = w.time_support();
  const double center = 0.5 * (lo + hi);
  const double n = static_cast<double>(w.seed().size());
  const double window = 200.0 * n * w.seed().delta();
  const int chunks = static_cast<int>(400.0 * n);
  return integrate_chunked(
      [w](double t) {
        const double p = w.evaluate(t);
        return p * p;
      },
      center - window, center + window, chunks, cfg);
}

}  // namespace seedwave
