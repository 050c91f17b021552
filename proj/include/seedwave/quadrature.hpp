#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include "seedwave/errors.hpp"

namespace seedwave {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_depth = 50;
};

struct IntegralResult {
  double value;
  double error_estimate;
};

namespace detail {

inline void check_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
    throw ValidationError(errc::bad_config, "quadrature tolerances must be > 0");
  }
  if (cfg.max_depth < 10) {
    throw ValidationError(errc::bad_config, "quadrature max_depth must be >= 10");
  }
}

template <typename F>
double eval_checked(F& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw ValidationError(errc::nonfinite_value,
                          "integrand returned a non-finite value at x = " + std::to_string(x));
  }
  return y;
}

struct SimpsonAccumulator {
  double error = 0.0;
  bool depth_exhausted = false;
};

// Classic adaptive Simpson: accept a panel when the two-half refinement moves
// the estimate by <= 15*eps, then add the Richardson correction delta/15.
template <typename F>
double adaptive_simpson(F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth, SimpsonAccumulator& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = eval_checked(f, lm);
  const double frm = eval_checked(f, rm);
  const double h = b - a;
  const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps || depth <= 0) {
    if (depth <= 0 && std::abs(delta) > 15.0 * eps) acc.depth_exhausted = true;
    acc.error += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, acc) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, acc);
}

template <typename F>
IntegralResult simpson_pass(F& f, double a, double b, double eps, int max_depth,
                            bool& exhausted) {
  const double fa = eval_checked(f, a);
  const double fb = eval_checked(f, b);
  const double fm = eval_checked(f, 0.5 * (a + b));
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  SimpsonAccumulator acc;
  const double value = adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, max_depth, acc);
  exhausted = acc.depth_exhausted;
  return {value, acc.error};
}

}  // namespace detail

/// Adaptive Simpson over [a, b] with an error estimate from step halving.
/// On convergence the estimate satisfies
///   error_estimate <= max(abs_tol, rel_tol*|value|).
/// Throws NonConvergenceError (carrying the best estimate) when max_depth is
/// exhausted before the tolerance is met.
template <typename F>
IntegralResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  detail::check_config(cfg);
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ValidationError(errc::bad_grid, "integration bounds must be finite with a < b");
  }

  // Coarse pass fixes the scale of the relative tolerance; one refinement pass
  // re-anchors it if the converged value came out much smaller.
  bool exhausted = false;
  double eps = cfg.abs_tol;
  {
    const double fa = detail::eval_checked(f, a);
    const double fb = detail::eval_checked(f, b);
    const double fm = detail::eval_checked(f, 0.5 * (a + b));
    const double coarse = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    eps = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));
  }
  IntegralResult res = detail::simpson_pass(f, a, b, eps, cfg.max_depth, exhausted);
  const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value));
  if (!exhausted && res.error_estimate > target) {
    res = detail::simpson_pass(f, a, b, target, cfg.max_depth, exhausted);
  }
  if (exhausted) {
    throw NonConvergenceError("adaptive Simpson exhausted max_depth before converging",
                              res.value, res.error_estimate);
  }
  return res;
}

/// Central finite difference of the given derivative order (1..6) at x0 with
/// step h, using the binomial stencil on the symmetric half-step grid:
///   f^(m)(x0) ~ h^-m * sum_i (-1)^i C(m,i) f(x0 + (m/2 - i) h).
/// Works for any value type with +,-,* double (double, std::complex, ...).
template <typename F>
auto central_difference(F&& f, double x0, int order, double h) {
  using R = std::decay_t<decltype(f(x0))>;
  if (order < 1 || order > 6) {
    throw ValidationError(errc::order_out_of_range,
                          "central_difference supports orders 1..6, got " +
                              std::to_string(order));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError(errc::bad_step, "finite-difference step h must be finite and > 0");
  }
  if (!std::isfinite(x0)) {
    throw ValidationError(errc::nonfinite_value, "x0 must be finite");
  }
  R acc{};
  double binom = 1.0;  // C(order, 0)
  for (int i = 0; i <= order; ++i) {
    const double offset = (0.5 * order - i) * h;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc = acc + f(x0 + offset) * (sign * binom);
    binom = binom * static_cast<double>(order - i) / static_cast<double>(i + 1);
  }
  double scale = 1.0;
  for (int i = 0; i < order; ++i) scale *= h;
  return acc * (1.0 / scale);
}

/// Composite form of integrate(): splits [a, b] into equal chunks and adapts
/// inside each. The plain adaptive rule can alias on integrands with many
/// oscillations per interval (a wide panel passes the step-halving test by
/// coincidence); pre-splitting at the oscillation scale removes that failure
/// mode. Values and error estimates accumulate across chunks.
template <typename F>
IntegralResult integrate_chunked(F&& f, double a, double b, int chunks,
                                 const QuadratureConfig& cfg = {}) {
  detail::check_config(cfg);
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ValidationError(errc::bad_grid, "integration bounds must be finite with a < b");
  }
  if (chunks < 1) {
    throw ValidationError(errc::bad_config, "chunk count must be >= 1");
  }
  QuadratureConfig chunk_cfg = cfg;
  chunk_cfg.abs_tol = cfg.abs_tol / static_cast<double>(chunks);
  const double width = (b - a) / static_cast<double>(chunks);
  IntegralResult total{0.0, 0.0};
  bool failed = false;
  for (int i = 0; i < chunks; ++i) {
    const double lo = a + static_cast<double>(i) * width;
    const double hi = (i == chunks - 1) ? b : a + static_cast<double>(i + 1) * width;
    try {
      const IntegralResult r = integrate(f, lo, hi, chunk_cfg);
      total.value += r.value;
      total.error_estimate += r.error_estimate;
    } catch (const NonConvergenceError& e) {
      total.value += e.value();
      total.error_estimate += e.error_estimate();
      failed = true;
    }
  }
  if (failed) {
    throw NonConvergenceError("chunked adaptive Simpson exhausted max_depth in a chunk",
                              total.value, total.error_estimate);
  }
  return total;
}

/// One Richardson step over h and h/2; cancels the O(h^2) term of the central
/// difference, leaving O(h^4).
template <typename F>
auto richardson_central_difference(F&& f, double x0, int order, double h) {
  const auto coarse = central_difference(f, x0, order, h);
  const auto fine = central_difference(f, x0, order, 0.5 * h);
  return (fine * 4.0 - coarse) * (1.0 / 3.0);
}

}  // namespace seedwave
