#include "exsim/tables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace exsim {

namespace {

void check_breaks(std::span<const double> b, const char* what) {
  if (b.empty()) throw std::invalid_argument(std::string(what) + ": no breakpoints");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i])) throw std::invalid_argument(std::string(what) + ": non-finite breakpoint");
    if (i > 0 && !(b[i] > b[i - 1])) {
      throw std::invalid_argument(std::string(what) + ": breakpoints not strictly increasing at index " +
                                  std::to_string(i));
    }
  }
}

/// Index of the lower bracket and the clamped fraction within it.
std::pair<std::size_t, double> locate(std::span<const double> b, double x) {
  if (b.size() == 1 || x <= b.front()) return {0, 0.0};
  if (x >= b.back()) return {b.size() - 2, 1.0};
  const auto it = std::upper_bound(b.begin(), b.end(), x);
  const auto i = static_cast<std::size_t>(it - b.begin()) - 1;
  return {i, (x - b[i]) / (b[i + 1] - b[i])};
}

}  // namespace

Curve::Curve(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  check_breaks(x_, "curve");
  if (x_.size() != y_.size()) throw std::invalid_argument("curve: x and y sizes differ");
  for (double v : y_) {
    if (!std::isfinite(v)) throw std::invalid_argument("curve: non-finite value");
  }
}

double Curve::operator()(double x) const {
  if (x_.empty()) throw std::logic_error("curve: empty table");
  if (x_.size() == 1) return y_.front();
  const auto [i, f] = locate(x_, x);
  return y_[i] + f * (y_[i + 1] - y_[i]);
}

Grid2D::Grid2D(std::vector<double> row_breaks, std::vector<double> col_breaks, std::vector<double> values)
    : rows_(std::move(row_breaks)), cols_(std::move(col_breaks)), values_(std::move(values)) {
  check_breaks(rows_, "grid rows");
  check_breaks(cols_, "grid columns");
  if (values_.size() != rows_.size() * cols_.size()) {
    throw std::invalid_argument("grid: value count does not match breakpoints");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite value");
  }
}

double Grid2D::operator()(double row, double col) const {
  if (values_.empty()) throw std::logic_error("grid: empty table");
  const auto [i, fr] = locate(rows_, row);
  const auto [j, fc] = locate(cols_, col);
  const std::size_t i1 = rows_.size() == 1 ? i : i + 1;
  const std::size_t j1 = cols_.size() == 1 ? j : j + 1;
  const double z00 = at(i, j), z01 = at(i, j1), z10 = at(i1, j), z11 = at(i1, j1);
  return (1.0 - fr) * ((1.0 - fc) * z00 + fc * z01) + fr * ((1.0 - fc) * z10 + fc * z11);
}

}  // namespace exsim
