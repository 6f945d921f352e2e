#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace exsim {

/// Universal gas constant [J/(mol K)], CODATA 2018.
inline constexpr double kGasConstant = 8.314462618;

enum class Species { N2, O2, H2O, CO2 };

inline constexpr std::array<Species, 4> kAllSpecies{Species::N2, Species::O2, Species::H2O,
                                                    Species::CO2};

std::string_view species_name(Species s);
Species species_from_name(std::string_view name);

/// Molar mass [kg/mol].
double molar_mass(Species s);

/// Dead state: temperature, pressure and atmospheric molar fractions.
///
/// `fractions` carries every atmospheric constituent, including an
/// "others" entry that only participates in the normalisation check.
struct ReferenceState {
  double T0 = 298.15;
  double P0 = 101325.0;
  std::map<std::string, double> fractions;

  /// 298.15 K, 1 atm, dry-ish air with N2/O2/CO2/H2O/others.
  static ReferenceState standard();

  /// Throws DomainError when an invariant is violated.
  void validate() const;

  double fraction(Species s) const;
};

/// Two-range NASA 7-coefficient fit for one species.
struct NasaPolynomial {
  double t_low = 200.0;
  double t_mid = 1000.0;
  double t_high = 6000.0;
  std::array<double, 7> low{};
  std::array<double, 7> high{};

  const std::array<double, 7>& coefficients(double T) const;
};

/// Ideal-gas property table for the tracked species.
class ThermoTable {
 public:
  /// Parses a delimited resource: one line per temperature range,
  /// `species, T_low, T_high, a1..a7`. Every tracked species needs exactly
  /// two adjacent ranges.
  static ThermoTable parse(std::string_view text);
  static ThermoTable from_file(const std::string& path);

  /// Table shipped with the library (same content as data/nasa7.dat).
  static const ThermoTable& builtin();

  const NasaPolynomial& polynomial(Species s) const;

  /// Molar heat capacity at constant pressure [J/(mol K)].
  double cp(Species s, double T) const;
  /// Molar enthalpy including formation enthalpy [J/mol].
  double enthalpy(Species s, double T) const;
  /// Molar entropy at the standard pressure [J/(mol K)].
  double entropy(Species s, double T) const;

 private:
  std::array<NasaPolynomial, 4> poly_{};
};

/// 1 - T0/T. Requires T >= T0 > 0.
double carnot_factor(double T, const ReferenceState& ref);

/// Exergy carried by a heat flow Qdot [W] through a boundary at T.
/// Sign follows Qdot (negative when heat leaves the system).
double heat_exergy_rate(double q_dot, double T, const ReferenceState& ref);

/// R T0 ln(f*/f0) [J/mol]; zero for an absent species (f* = 0).
double chemical_exergy(Species s, double f_star, const ReferenceState& ref);

/// h(T) - h(T0) - T0 (s(T) - s(T0)) [J/mol] at P0.
double physical_exergy(const ThermoTable& table, Species s, double T, const ReferenceState& ref);

}  // namespace exsim
