#include "exsim/ledger.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

namespace exsim {

namespace {

constexpr std::array<std::string_view, kTermCount> kIds{
    "E_trac",     "E_brake",    "E_roll",     "E_aero",     "E_batt",
    "X_dest_batt", "X_heat_batt", "X_heat_mot", "X_dest_mot", "X_fuel_eng",
    "X_work_eng", "X_exh_eng",  "X_heat_eng", "X_fric_eng", "X_comb_eng",
};

struct Group {
  std::string_view name;
  std::initializer_list<Term> terms;
};

const std::array<Group, 12>& groups() {
  static const std::array<Group, 12> g{{
      {"rolling", {Term::Rolling}},
      {"aero", {Term::Aero}},
      {"brake", {Term::Brake}},
      {"powertrain", {Term::Traction, Term::BatteryWork, Term::EngineWork}},
      {"battery_destruction", {Term::BatteryDestruction}},
      {"battery_heat", {Term::BatteryHeat}},
      {"motor_destruction", {Term::MotorDestruction}},
      {"motor_heat", {Term::MotorHeat}},
      {"engine_combustion", {Term::EngineCombustion}},
      {"engine_exhaust", {Term::EngineExhaust}},
      {"engine_heat", {Term::EngineHeat}},
      {"engine_friction", {Term::EngineFriction}},
  }};
  return g;
}

}  // namespace

std::string_view term_id(Term t) { return kIds[static_cast<std::size_t>(t)]; }

Term term_from_id(std::string_view id) {
  for (std::size_t i = 0; i < kIds.size(); ++i) {
    if (kIds[i] == id) return static_cast<Term>(i);
  }
  throw std::invalid_argument("unknown ledger term '" + std::string(id) + "'");
}

bool is_balance_term(Term t) { return t != Term::EngineFuel; }

bool is_destruction_term(Term t) {
  return t == Term::BatteryDestruction || t == Term::MotorDestruction ||
         t == Term::EngineCombustion || t == Term::EngineFriction;
}

double LossReport::percent_sum() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.percent;
  return s;
}

const LossEntry* LossReport::find(std::string_view group) const {
  for (const auto& e : entries) {
    if (e.group == group) return &e;
  }
  return nullptr;
}

ExergyLedger::ExergyLedger(double x_initial, double x_max) : x_initial_(x_initial), x_max_(x_max) {}

void ExergyLedger::add(Term t, double joules) { totals_[static_cast<std::size_t>(t)] += joules; }

void ExergyLedger::add(std::string_view id, double joules) { add(term_from_id(id), joules); }

double ExergyLedger::balance() const {
  double s = 0.0;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (is_balance_term(static_cast<Term>(i))) s += totals_[i];
  }
  return s;
}

void ExergyLedger::record(double time, double x_veh) {
  times_.push_back(time);
  x_veh_.push_back(x_veh);
  x_rel_.push_back(x_veh / x_max_);
}

LossReport ExergyLedger::close() const {
  LossReport report;
  report.total_loss = -balance();
  if (report.total_loss == 0.0) return report;
  for (const auto& g : groups()) {
    double contribution = 0.0;
    bool touched = false;
    for (Term t : g.terms) {
      contribution += total(t);
      touched = touched || total(t) != 0.0;
    }
    if (!touched) continue;
    const double loss = -contribution;
    report.entries.push_back({std::string(g.name), loss, 100.0 * loss / report.total_loss});
  }
  return report;
}

}  // namespace exsim
