#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seedwave/detail.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/rng.hpp"

namespace seedwave {

/// A finite real sample sequence u_0..u_{n-1} with sampling period delta and
/// time origin t0 (sample k sits at t0 + k*delta). Immutable after
/// construction; everything else in this library is generated from it.
class SeedSequence {
 public:
  SeedSequence(std::vector<double> values, double delta, double t0)
      : values_(std::move(values)), delta_(delta), t0_(t0) {
    if (values_.size() < 2) {
      throw ValidationError(errc::sequence_too_short,
                            "seed sequence needs at least 2 samples, got " +
                                std::to_string(values_.size()));
    }
    if (!std::isfinite(delta_) || delta_ <= 0.0) {
      throw ValidationError(errc::nonpositive_delta,
                            "sampling period must be finite and > 0");
    }
    if (!std::isfinite(t0_)) {
      throw ValidationError(errc::nonfinite_value, "time origin t0 must be finite");
    }
    if (!detail::all_finite(values_)) {
      throw ValidationError(errc::nonfinite_value, "seed values must all be finite");
    }
  }

  const std::vector<double>& values() const noexcept { return values_; }
  double delta() const noexcept { return delta_; }
  double t0() const noexcept { return t0_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Time of sample `index` (0-based).
  double sample_time(std::ptrdiff_t index) const {
    return t0_ + static_cast<double>(index) * delta_;
  }

  /// Nyquist band edge of the sampling grid, Omega = pi/delta, in rad/s.
  double band_edge() const { return std::numbers::pi / delta_; }

  /// True when n is odd and t0 = -l*delta with l = (n-1)/2, i.e. the samples
  /// occupy symmetric integer offsets -l..l around time zero. Compared with a
  /// small scale-aware slack so sequences rebuilt from serialized reals still
  /// qualify.
  bool centered() const {
    if (size() % 2 == 0) return false;
    const double l = static_cast<double>((size() - 1) / 2);
    const double expected = -l * delta_;
    const double slack = 32.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(t0_) + l * delta_ + delta_);
    return std::abs(t0_ - expected) <= slack;
  }

  /// Half length l = (n-1)/2 of a centered sequence.
  int half_length() const {
    require_centered();
    return static_cast<int>((size() - 1) / 2);
  }

  /// Sample at centered offset k in [-l, l].
  double at_offset(int k) const {
    const int l = half_length();
    if (k < -l || k > l) {
      throw ValidationError(errc::matrix_bounds,
                            "offset " + std::to_string(k) + " outside [-l, l]");
    }
    return values_[static_cast<std::size_t>(k + l)];
  }

  double sum() const { return detail::pairwise_sum(values_); }
  double mean() const { return sum() / static_cast<double>(size()); }
  double max_abs() const { return detail::max_abs(values_); }

  /// Scale-aware zero-sum tolerance: 1e-12 * n * max(1, max|u|).
  double admissible_tolerance() const {
    return 1e-12 * static_cast<double>(size()) * std::max(1.0, max_abs());
  }

  /// Zero-mean predicate, |sum| <= tol. This is checked, not enforced, so
  /// non-admissible sequences can still be built and inspected.
  bool admissible() const { return admissible(admissible_tolerance()); }
  bool admissible(double tol) const { return std::abs(sum()) <= tol; }

  void require_centered() const {
    if (!centered()) {
      throw ValidationError(errc::not_centered,
                            "operation requires a centered sequence (odd length, "
                            "t0 = -((n-1)/2)*delta)");
    }
  }

  friend bool operator==(const SeedSequence& a, const SeedSequence& b) {
    return a.values_ == b.values_ && a.delta_ == b.delta_ && a.t0_ == b.t0_;
  }

 private:
  std::vector<double> values_;
  double delta_;
  double t0_;
};

/// Centered random seed: n i.i.d. Gaussian(0, variance) draws, recentered
/// exactly by subtracting the sample mean (twice, to push the residual to
/// rounding level). Deterministic in rng_seed. Default delta maps the sample
/// span onto [-1, 1].
inline SeedSequence random_seed(int n, double variance, std::uint64_t rng_seed,
                                std::optional<double> delta = std::nullopt) {
  if (n >= 0 && n % 2 == 0) {
    throw ValidationError(errc::parity, "random seed length must be odd, got " +
                                            std::to_string(n));
  }
  if (n < 3) {
    throw ValidationError(errc::sequence_too_short,
                          "random seed length must be >= 3, got " + std::to_string(n));
  }
  if (!std::isfinite(variance) || variance <= 0.0) {
    throw ValidationError(errc::nonpositive_variance, "variance must be finite and > 0");
  }
  const int l = (n - 1) / 2;
  const double d = delta.value_or(2.0 / static_cast<double>(n - 1));
  if (!std::isfinite(d) || d <= 0.0) {
    throw ValidationError(errc::nonpositive_delta, "delta override must be finite and > 0");
  }

  GaussianRng rng(rng_seed);
  const double sigma = std::sqrt(variance);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (double& v : values) v = sigma * rng.gauss();
  for (int pass = 0; pass < 2; ++pass) {
    const double mu = detail::pairwise_sum(values) / static_cast<double>(n);
    for (double& v : values) v -= mu;
  }
  return SeedSequence(std::move(values), d, -static_cast<double>(l) * d);
}

/// Samples in reverse order; delta and t0 are index relabels and unchanged.
inline SeedSequence reverse(const SeedSequence& seq) {
  std::vector<double> values(seq.values().rbegin(), seq.values().rend());
  return SeedSequence(std::move(values), seq.delta(), seq.t0());
}

/// Even/odd split of a centered sequence: u_e = 0.5(u + u_inv),
/// u_o = 0.5(u - u_inv). Then u_e(-k) = u_e(k) and u_o(-k) = -u_o(k) exactly,
/// u_o(0) = 0, and u_e + u_o recomposes u to within one rounding step.
inline std::pair<SeedSequence, SeedSequence> decompose_even_odd(const SeedSequence& seq) {
  seq.require_centered();
  const std::size_t n = seq.size();
  std::vector<double> even(n), odd(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = seq.values()[i];
    const double b = seq.values()[n - 1 - i];
    even[i] = 0.5 * (a + b);
    odd[i] = 0.5 * (a - b);
  }
  return {SeedSequence(std::move(even), seq.delta(), seq.t0()),
          SeedSequence(std::move(odd), seq.delta(), seq.t0())};
}

}  // namespace seedwave
