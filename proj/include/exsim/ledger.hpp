#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace exsim {

/// Cumulative exergy terms of the whole-vehicle balance.
///
/// Every entry is stored as its signed contribution to X_veh, so the
/// dissipative terms are negative and the balance terms add up to
/// X_veh(t_f) - X_veh(0). EngineFuel is a memo (fuel exergy consumed,
/// positive); it is already represented by the five engine terms and is
/// excluded from the balance.
enum class Term {
  Traction,
  Brake,
  Rolling,
  Aero,
  BatteryWork,
  BatteryDestruction,
  BatteryHeat,
  MotorHeat,
  MotorDestruction,
  EngineFuel,
  EngineWork,
  EngineExhaust,
  EngineHeat,
  EngineFriction,
  EngineCombustion,
};

inline constexpr std::size_t kTermCount = 15;

std::string_view term_id(Term t);
/// Throws std::invalid_argument for an unknown id.
Term term_from_id(std::string_view id);
bool is_balance_term(Term t);
/// True for the exergy-destruction entries (always <= 0).
bool is_destruction_term(Term t);

struct LossEntry {
  std::string group;
  double joules = 0.0;   // loss, positive when availability is removed
  double percent = 0.0;  // share of X_veh(0) - X_veh(t_f)
};

struct LossReport {
  double total_loss = 0.0;  // X_veh(0) - X_veh(t_f)
  std::vector<LossEntry> entries;

  double percent_sum() const;
  /// Entry for `group`, or nullptr.
  const LossEntry* find(std::string_view group) const;
};

class ExergyLedger {
 public:
  ExergyLedger() = default;
  /// `x_max` normalises the relative-exergy trajectory.
  ExergyLedger(double x_initial, double x_max);

  void add(Term t, double joules);
  void add(std::string_view id, double joules);

  double total(Term t) const { return totals_[static_cast<std::size_t>(t)]; }
  /// Sum of all balance terms.
  double balance() const;

  void record(double time, double x_veh);

  double initial() const { return x_initial_; }
  double x_max() const { return x_max_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& x_veh() const { return x_veh_; }
  const std::vector<double>& x_rel() const { return x_rel_; }

  /// Percentage breakdown of the losses, grouped as the powertrain loss
  /// figure (traction and battery work are merged into "powertrain").
  /// Empty when nothing was lost.
  LossReport close() const;

 private:
  std::array<double, kTermCount> totals_{};
  double x_initial_ = 0.0;
  double x_max_ = 1.0;
  std::vector<double> times_;
  std::vector<double> x_veh_;
  std::vector<double> x_rel_;
};

}  // namespace exsim
