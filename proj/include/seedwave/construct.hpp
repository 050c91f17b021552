#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seedwave/detail.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/matrix.hpp"
#include "seedwave/rng.hpp"
#include "seedwave/seed_sequence.hpp"

namespace seedwave {

/// The linear system that pins the middle block of a symmetric seed with p
/// vanishing moments: M x = c, where M holds powers of the p middle node
/// indices and c carries the (sign-flipped, doubled) moment contribution of
/// the random wing.
struct ConstructionSystem {
  Matrix M;                    // p x p, entry (m, j) = nodes[j]^m
  std::vector<double> c;       // length p; zero at odd indices
  std::vector<double> x;       // length p once solved, empty before
  std::vector<int> nodes;      // middle indices -(p-1)/2 .. (p-1)/2
  std::vector<double> wing;    // the random outer block u_R, length (n-p)/2
  double condition_estimate = 0.0;  // inf-norm condition number of M
};

/// Dense solve of M x = c by Gaussian elimination with partial pivoting on
/// the row-equilibrated system (each row divided by its max-abs entry; the
/// moment rows span many decades, and without equilibration the pivot test
/// would misread a nonsingular system as rank-deficient). A pivot below
/// 1e-13 * ||M_eq||_inf reports singularity.
inline std::vector<double> solve_dense(const Matrix& m, const std::vector<double>& c) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) {
    throw ValidationError(errc::dimension_mismatch, "solve_dense requires a nonempty square matrix");
  }
  if (c.size() != n) {
    throw ValidationError(errc::dimension_mismatch,
                          "right-hand side length " + std::to_string(c.size()) +
                              " does not match matrix dimension " + std::to_string(n));
  }

  Matrix a = m;
  std::vector<double> b = c;
  for (std::size_t i = 0; i < n; ++i) {
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) throw SingularMatrixError("matrix has an all-zero row");
    for (std::size_t j = 0; j < n; ++j) a(i, j) /= scale;
    b[i] /= scale;
  }
  const double pivot_floor = 1e-13 * a.norm_inf();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > pivot_mag) {
        pivot_mag = std::abs(a(r, col));
        pivot_row = r;
      }
    }
    if (pivot_mag < pivot_floor) {
      throw SingularMatrixError("matrix is singular to working precision (pivot " +
                                std::to_string(pivot_mag) + " below threshold)");
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(b[col], b[pivot_row]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

namespace detail {

inline double condition_inf(const Matrix& m) {
  // Explicit inverse column by column; fine at these sizes (p <= ~15).
  const std::size_t n = m.rows();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e.assign(n, 0.0);
    e[j] = 1.0;
    const std::vector<double> col = solve_dense(m, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return m.norm_inf() * inv.norm_inf();
}

inline void check_construction_shape(int n, int p) {
  if (n < 3 || n % 2 == 0) {
    throw ValidationError(errc::parity,
                          "seed length n must be odd and >= 3, got " + std::to_string(n));
  }
  if (p < 1 || p % 2 == 0) {
    throw ValidationError(
        errc::parity,
        "vanishing order p must be odd and >= 1, got " + std::to_string(p) +
            " (the symmetric construction needs p consecutive middle nodes centered at 0; "
            "an even request would silently gain the extra odd moment, ask for p+1 instead)");
  }
  if (p >= n) {
    throw ValidationError(errc::order_exceeds_length,
                          "vanishing order p must satisfy p < n (a nonzero seed of length n "
                          "cannot annihilate n moments), got p = " +
                              std::to_string(p) + ", n = " + std::to_string(n));
  }
  if ((n - p) % 2 != 0) {
    throw ValidationError(errc::parity, "n - p must be even");
  }
}

}  // namespace detail

/// Builds the unsolved system for a seed of length n with vanishing order p
/// from the random wing u_R (length (n-p)/2). The wing occupies offsets
/// -l..-l+l_R-1, its mirror l-l_R+1..l, and the middle nodes are the p
/// consecutive integers centered at 0. Constant terms:
///   c_i = -2 * sum_j (-l+j)^i u_R(j)  for even i,   c_i = 0 for odd i
/// (the mirrored wing doubles even-power contributions and cancels odd ones).
inline ConstructionSystem assemble_system(const std::vector<double>& wing, int n, int p) {
  detail::check_construction_shape(n, p);
  const int l = (n - 1) / 2;
  const int wing_len = (n - p) / 2;
  if (static_cast<int>(wing.size()) != wing_len) {
    throw ValidationError(errc::wing_length_mismatch,
                          "wing length must be (n-p)/2 = " + std::to_string(wing_len) +
                              ", got " + std::to_string(wing.size()));
  }
  if (!seedwave::detail::all_finite(wing)) {
    throw ValidationError(errc::nonfinite_value, "wing values must all be finite");
  }

  ConstructionSystem sys;
  sys.wing = wing;
  const int half = (p - 1) / 2;
  for (int k = -half; k <= half; ++k) sys.nodes.push_back(k);

  sys.M = Matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  for (int row = 0; row < p; ++row) {
    for (int j = 0; j < p; ++j) {
      sys.M(static_cast<std::size_t>(row), static_cast<std::size_t>(j)) =
          seedwave::detail::int_pow(static_cast<double>(sys.nodes[static_cast<std::size_t>(j)]), row);
    }
  }

  sys.c.assign(static_cast<std::size_t>(p), 0.0);
  for (int i = 0; i < p; i += 2) {
    std::vector<double> terms;
    terms.reserve(wing.size());
    for (int j = 0; j < wing_len; ++j) {
      terms.push_back(seedwave::detail::int_pow(static_cast<double>(-l + j), i) *
                      wing[static_cast<std::size_t>(j)]);
    }
    sys.c[static_cast<std::size_t>(i)] = -2.0 * seedwave::detail::pairwise_sum(terms);
  }

  sys.condition_estimate = detail::condition_inf(sys.M);
  return sys;
}

/// Concatenates wing, symmetrized middle block and mirrored wing into the
/// centered output seed. The middle uses 0.5*(x + reverse(x)) so the result
/// is exactly symmetric; this leaves even-moment sums untouched and zeroes
/// the odd ones, and stays within the solver's residual tolerance.
inline SeedSequence compose_symmetric_seed(const ConstructionSystem& sys, int n,
                                           std::optional<double> delta = std::nullopt) {
  const int p = static_cast<int>(sys.nodes.size());
  detail::check_construction_shape(n, p);
  if (static_cast<int>(sys.x.size()) != p) {
    throw ValidationError(errc::dimension_mismatch, "system must be solved before composing");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  values.insert(values.end(), sys.wing.begin(), sys.wing.end());
  for (int j = 0; j < p; ++j) {
    values.push_back(0.5 * (sys.x[static_cast<std::size_t>(j)] +
                            sys.x[static_cast<std::size_t>(p - 1 - j)]));
  }
  values.insert(values.end(), sys.wing.rbegin(), sys.wing.rend());

  if (seedwave::detail::max_abs(values) == 0.0) {
    throw DegenerateInputError("construction produced the all-zero seed (zero wing)");
  }
  const int l = (n - 1) / 2;
  const double d = delta.value_or(2.0 / static_cast<double>(n - 1));
  if (!std::isfinite(d) || d <= 0.0) {
    throw ValidationError(errc::nonpositive_delta, "delta override must be finite and > 0");
  }
  return SeedSequence(std::move(values), d, -static_cast<double>(l) * d);
}

struct SymmetricWaveletBuild {
  SeedSequence seed;
  ConstructionSystem system;
};

/// The full pipeline: draw the Gaussian wing (deterministic in rng_seed),
/// assemble and solve the moment system, and concatenate. The output seed is
/// exactly symmetric, annihilates moments m < p (and m = p, since p is odd
/// and symmetric seeds lose all odd moments for free), and spans [-1, 1] in
/// time unless delta is overridden.
inline SymmetricWaveletBuild build_symmetric_wavelet(int n, int p, double variance,
                                                     std::uint64_t rng_seed,
                                                     std::optional<double> delta = std::nullopt) {
  detail::check_construction_shape(n, p);
  if (!std::isfinite(variance) || variance <= 0.0) {
    throw ValidationError(errc::nonpositive_variance, "variance must be finite and > 0");
  }
  const int wing_len = (n - p) / 2;
  GaussianRng rng(rng_seed);
  const double sigma = std::sqrt(variance);
  std::vector<double> wing(static_cast<std::size_t>(wing_len));
  for (double& v : wing) v = sigma * rng.gauss();

  ConstructionSystem sys = assemble_system(wing, n, p);
  sys.x = solve_dense(sys.M, sys.c);
  SeedSequence seed = compose_symmetric_seed(sys, n, delta);
  return {std::move(seed), std::move(sys)};
}

}  // namespace seedwave
