#include "exsim/exergy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "exsim/error.hpp"
#include "text.hpp"

namespace exsim {

namespace {

constexpr std::string_view kBuiltinNasa = R"(
N2,  200.0, 1000.0, 3.53100528, -1.23660988e-04, -5.02999433e-07, 2.43530612e-09, -1.40881235e-12, -1046.97628, 2.96747038
N2, 1000.0, 6000.0, 2.95257637, 1.3969004e-03, -4.92631603e-07, 7.86010195e-11, -4.60755204e-15, -923.948688, 5.87188762
O2,  200.0, 1000.0, 3.78245636, -2.99673416e-03, 9.84730201e-06, -9.68129509e-09, 3.24372837e-12, -1063.94356, 3.65767573
O2, 1000.0, 6000.0, 3.66096065, 6.56365811e-04, -1.41149627e-07, 2.05797935e-11, -1.29913436e-15, -1215.97718, 3.41536279
H2O, 200.0, 1000.0, 4.19864056, -2.0364341e-03, 6.52040211e-06, -5.48797062e-09, 1.77197817e-12, -30293.7267, -0.849032208
H2O,1000.0, 6000.0, 2.67703787, 2.97318329e-03, -7.7376969e-07, 9.44336689e-11, -4.26900959e-15, -29885.8938, 6.88255571
CO2, 200.0, 1000.0, 2.35677352, 8.98459677e-03, -7.12356269e-06, 2.45919022e-09, -1.43699548e-13, -48371.9697, 9.90105222
CO2,1000.0, 6000.0, 4.63659493, 2.74131991e-03, -9.95828531e-07, 1.60373011e-10, -9.16103468e-15, -49024.9341, -1.93489551
)";

std::size_t index_of(Species s) { return static_cast<std::size_t>(s); }

void check_range(const NasaPolynomial& p, Species s, double T) {
  if (!(T >= p.t_low && T <= p.t_high)) {
    throw DomainError("temperature " + std::to_string(T) + " K outside NASA range of " +
                      std::string(species_name(s)));
  }
}

}  // namespace

std::string_view species_name(Species s) {
  switch (s) {
    case Species::N2: return "N2";
    case Species::O2: return "O2";
    case Species::H2O: return "H2O";
    case Species::CO2: return "CO2";
  }
  return "?";
}

Species species_from_name(std::string_view name) {
  for (Species s : kAllSpecies) {
    if (species_name(s) == name) return s;
  }
  throw DomainError("unknown species '" + std::string(name) + "'");
}

double molar_mass(Species s) {
  switch (s) {
    case Species::N2: return 28.0134e-3;
    case Species::O2: return 31.9988e-3;
    case Species::H2O: return 18.01528e-3;
    case Species::CO2: return 44.0095e-3;
  }
  return 0.0;
}

ReferenceState ReferenceState::standard() {
  ReferenceState r;
  r.T0 = 298.15;
  r.P0 = 101325.0;
  r.fractions = {{"N2", 0.7567}, {"O2", 0.2035}, {"CO2", 0.0003}, {"H2O", 0.0303}, {"others", 0.0092}};
  return r;
}

void ReferenceState::validate() const {
  if (!(T0 > 0.0)) throw DomainError("reference temperature must be positive");
  if (!(P0 > 0.0)) throw DomainError("reference pressure must be positive");
  double sum = 0.0;
  for (const auto& [name, f] : fractions) {
    if (!(f > 0.0)) throw DomainError("reference fraction of " + name + " must be positive");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("reference fractions sum to " + std::to_string(sum) + ", expected 1");
  }
  for (Species s : kAllSpecies) {
    if (!fractions.contains(std::string(species_name(s)))) {
      throw DomainError("reference state lacks species " + std::string(species_name(s)));
    }
  }
}

double ReferenceState::fraction(Species s) const {
  auto it = fractions.find(std::string(species_name(s)));
  if (it == fractions.end()) {
    throw DomainError("reference state lacks species " + std::string(species_name(s)));
  }
  return it->second;
}

const std::array<double, 7>& NasaPolynomial::coefficients(double T) const {
  return T < t_mid ? low : high;
}

ThermoTable ThermoTable::parse(std::string_view text) {
  ThermoTable table;
  std::array<int, 4> ranges{};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::strip_comment(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;

    const auto fields = detail::split_fields(line);
    if (fields.size() != 10) {
      throw ParseError("expected 10 fields (species, T_low, T_high, 7 coefficients), got " +
                       std::to_string(fields.size()),
                       line_no);
    }
    Species s{};
    try {
      s = species_from_name(fields[0]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
    const double lo = detail::parse_double(fields[1], line_no);
    const double hi = detail::parse_double(fields[2], line_no);
    if (!(hi > lo)) throw ParseError("range upper bound must exceed lower bound", line_no);
    std::array<double, 7> a{};
    for (std::size_t k = 0; k < 7; ++k) a[k] = detail::parse_double(fields[3 + k], line_no);

    auto& p = table.poly_[index_of(s)];
    auto& n = ranges[index_of(s)];
    if (n == 0) {
      p.t_low = lo;
      p.t_mid = hi;
      p.low = a;
    } else if (n == 1) {
      if (lo != p.t_mid) throw ParseError("ranges of " + std::string(fields[0]) + " are not adjacent", line_no);
      p.t_high = hi;
      p.high = a;
    } else {
      throw ParseError("more than two ranges for " + std::string(fields[0]), line_no);
    }
    ++n;
  }
  for (Species s : kAllSpecies) {
    if (ranges[index_of(s)] != 2) {
      throw ParseError("species " + std::string(species_name(s)) + " needs exactly two ranges");
    }
  }
  return table;
}

ThermoTable ThermoTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open NASA table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const ThermoTable& ThermoTable::builtin() {
  static const ThermoTable table = parse(kBuiltinNasa);
  return table;
}

const NasaPolynomial& ThermoTable::polynomial(Species s) const { return poly_[index_of(s)]; }

double ThermoTable::cp(Species s, double T) const {
  const auto& p = polynomial(s);
  check_range(p, s, T);
  const auto& a = p.coefficients(T);
  return kGasConstant * (a[0] + T * (a[1] + T * (a[2] + T * (a[3] + T * a[4]))));
}

double ThermoTable::enthalpy(Species s, double T) const {
  const auto& p = polynomial(s);
  check_range(p, s, T);
  const auto& a = p.coefficients(T);
  const double h_rt =
      a[0] + T * (a[1] / 2.0 + T * (a[2] / 3.0 + T * (a[3] / 4.0 + T * a[4] / 5.0))) + a[5] / T;
  return kGasConstant * T * h_rt;
}

double ThermoTable::entropy(Species s, double T) const {
  const auto& p = polynomial(s);
  check_range(p, s, T);
  const auto& a = p.coefficients(T);
  const double s_r =
      a[0] * std::log(T) + T * (a[1] + T * (a[2] / 2.0 + T * (a[3] / 3.0 + T * a[4] / 4.0))) + a[6];
  return kGasConstant * s_r;
}

double carnot_factor(double T, const ReferenceState& ref) {
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  if (T < ref.T0) {
    throw DomainError("temperature " + std::to_string(T) + " K below the dead state " +
                      std::to_string(ref.T0) + " K");
  }
  return 1.0 - ref.T0 / T;
}

double heat_exergy_rate(double q_dot, double T, const ReferenceState& ref) {
  return carnot_factor(T, ref) * q_dot;
}

double chemical_exergy(Species s, double f_star, const ReferenceState& ref) {
  if (f_star < 0.0) throw DomainError("negative molar fraction");
  const double f0 = ref.fraction(s);
  if (!(f0 > 0.0)) throw DomainError("reference fraction must be positive");
  if (f_star == 0.0) return 0.0;
  return kGasConstant * ref.T0 * std::log(f_star / f0);
}

double physical_exergy(const ThermoTable& table, Species s, double T, const ReferenceState& ref) {
  if (T == ref.T0) return 0.0;
  const double dh = table.enthalpy(s, T) - table.enthalpy(s, ref.T0);
  const double ds = table.entropy(s, T) - table.entropy(s, ref.T0);
  return dh - ref.T0 * ds;
}

}  // namespace exsim
