#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <string>

#include "seedwave/seed_sequence.hpp"

namespace helpers {

/// True when a and b are equal or adjacent doubles.
inline bool within_one_ulp(double a, double b) {
  if (a == b) return true;
  return std::nextafter(a, b) == b;
}

/// Spacing of doubles at magnitude |x|.
inline double ulp_at(double x) {
  const double m = std::abs(x);
  return std::nextafter(m, std::numeric_limits<double>::infinity()) - m;
}

/// Deterministic centered admissible seed for property tests.
inline seedwave::SeedSequence random_centered(int n, std::uint64_t rng_seed,
                                              double variance = 1.0) {
  return seedwave::random_seed(n, variance, rng_seed);
}

/// Composite Simpson with 2*panels subintervals.
template <typename F>
double composite_simpson(F&& f, double a, double b, int panels) {
  const int n = 2 * panels;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    acc += ((i % 2 == 1) ? 4.0 : 2.0) * f(a + i * h);
  }
  return acc * h / 3.0;
}

/// Step-halving oracle independent of the library's adaptive routine:
/// doubles the panel count until two successive composite rules agree.
template <typename F>
double simpson_oracle(F&& f, double a, double b, double tol = 1e-11) {
  int panels = 32;
  double prev = composite_simpson(f, a, b, panels);
  for (int iter = 0; iter < 22; ++iter) {
    panels *= 2;
    const double cur = composite_simpson(f, a, b, panels);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

/// Fresh unique directory under the system temp root.
inline std::filesystem::path temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  const auto path = std::filesystem::temp_directory_path() /
                    ("seedwave_test_" + tag + "_" + std::to_string(rng()));
  std::filesystem::create_directories(path);
  return path;
}

struct TempDir {
  explicit TempDir(const std::string& tag) : path(temp_dir(tag)) {}
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::filesystem::path path;
};

}  // namespace helpers
