#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace seedwave {

/// Seeded Gaussian generator: std::mt19937_64 (bit-reproducible across
/// standard libraries) plus an explicit Box-Muller transform.
/// std::normal_distribution is avoided on purpose: its algorithm is
/// implementation-defined, which would make seeded runs non-portable.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  /// One N(0, 1) draw.
  double gauss() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;          // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double operator()() { return gauss(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace seedwave
