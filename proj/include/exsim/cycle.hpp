#pragma once

#include <cstddef>
#include <vector>

namespace exsim {

/// Target speed profile. Times in s from 0, speeds in m/s.
class DriveCycle {
 public:
  DriveCycle() = default;
  /// Throws std::invalid_argument unless t starts at 0, is strictly
  /// increasing, sizes match and every speed is finite and >= 0.
  DriveCycle(std::vector<double> t, std::vector<double> v);

  std::size_t size() const { return t_.size(); }
  bool empty() const { return t_.empty(); }
  double duration() const { return t_.empty() ? 0.0 : t_.back(); }
  const std::vector<double>& times() const { return t_; }
  const std::vector<double>& speeds() const { return v_; }

  /// Linear interpolation, clamped to the ends.
  double speed_at(double t) const;
  /// Smallest sampling interval; 0 for fewer than two samples.
  double min_step() const;

 private:
  std::vector<double> t_;
  std::vector<double> v_;
};

}  // namespace exsim
