#include "exsim/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace exsim {

DriveCycle::DriveCycle(std::vector<double> t, std::vector<double> v) : t_(std::move(t)), v_(std::move(v)) {
  if (t_.size() != v_.size()) throw std::invalid_argument("cycle: time and speed sizes differ");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i]) || !std::isfinite(v_[i])) {
      throw std::invalid_argument("cycle: non-finite sample " + std::to_string(i));
    }
    if (v_[i] < 0.0) throw std::invalid_argument("cycle: negative speed at sample " + std::to_string(i));
    if (i > 0 && !(t_[i] > t_[i - 1])) {
      throw std::invalid_argument("cycle: time not strictly increasing at sample " + std::to_string(i));
    }
  }
  if (!t_.empty() && t_.front() != 0.0) throw std::invalid_argument("cycle: first sample must be at t = 0");
}

double DriveCycle::speed_at(double t) const {
  if (t_.empty()) throw std::logic_error("cycle: empty");
  if (t <= t_.front()) return v_.front();
  if (t >= t_.back()) return v_.back();
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const auto i = static_cast<std::size_t>(it - t_.begin()) - 1;
  const double f = (t - t_[i]) / (t_[i + 1] - t_[i]);
  return v_[i] + f * (v_[i + 1] - v_[i]);
}

double DriveCycle::min_step() const {
  double m = 0.0;
  for (std::size_t i = 1; i < t_.size(); ++i) {
    const double d = t_[i] - t_[i - 1];
    if (i == 1 || d < m) m = d;
  }
  return m;
}

}  // namespace exsim
