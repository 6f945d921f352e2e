#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <vector>

#include "exsim/cycle.hpp"
#include "exsim/io.hpp"

namespace exsim::test {

inline std::filesystem::path data_dir() { return EXSIM_DATA_DIR; }
inline std::filesystem::path wltp_file() { return EXSIM_WLTP_FILE; }
inline bool have_wltp() { return std::filesystem::exists(wltp_file()); }

inline DriveCycle synthetic_cycle() { return load_cycle(data_dir() / "cycles/synthetic_mixed.csv"); }

/// Random-walk speed profile with standstill at both ends.
inline DriveCycle random_cycle(std::size_t steps, unsigned seed, double v_max = 30.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> accel(-1.5, 1.5);
  std::vector<double> t, v;
  double speed = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    t.push_back(static_cast<double>(k));
    const bool tail = k + 20 >= steps;
    if (k == 0 || k == steps) speed = 0.0;
    else if (tail) speed = std::max(0.0, speed - 2.0);
    else speed = std::clamp(speed + accel(rng), 0.0, v_max);
    v.push_back(speed);
  }
  return DriveCycle(t, v);
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("exsim_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace exsim::test
