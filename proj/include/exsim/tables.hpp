#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace exsim {

/// Piecewise-linear breakpoint table y(x), clamped outside [x_front, x_back].
class Curve {
 public:
  Curve() = default;
  /// Throws std::invalid_argument unless x is strictly increasing, sizes
  /// match and all values are finite.
  Curve(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;

  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }
  bool empty() const { return x_.empty(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Rectangular grid z(row, col) with bilinear interpolation, clamped to
/// the grid hull. Rows are indexed by `row_breaks`, columns by
/// `col_breaks`; `values` is row-major.
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(std::vector<double> row_breaks, std::vector<double> col_breaks, std::vector<double> values);

  /// Throws std::logic_error on an empty grid.
  double operator()(double row, double col) const;

  double at(std::size_t i, std::size_t j) const { return values_[i * cols_.size() + j]; }

  std::span<const double> row_breaks() const { return rows_; }
  std::span<const double> col_breaks() const { return cols_; }
  std::span<const double> values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::vector<double> rows_;
  std::vector<double> cols_;
  std::vector<double> values_;
};

}  // namespace exsim
