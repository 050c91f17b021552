#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace seedwave {

/// Dense row-major matrix of doubles. Small systems only; no view semantics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  /// Row-major storage, rows()*cols() entries.
  const std::vector<double>& data() const noexcept { return data_; }

  /// Induced infinity norm (max absolute row sum).
  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& x) {
  assert(m.cols() == x.size());
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace seedwave
