#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace seedwave::detail {

inline bool all_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

/// Pairwise (cascade) summation; error grows like log2(n)·eps instead of n·eps.
inline double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 16) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// base^exp by repeated multiplication, exp >= 0, with the 0^0 = 1 convention.
inline double int_pow(double base, int exp) {
  double acc = 1.0;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

inline double max_abs(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace seedwave::detail
