#include "exsim/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "exsim/error.hpp"
#include "text.hpp"

namespace exsim {

namespace fs = std::filesystem;
using detail::parse_double;
using detail::split_fields;
using detail::strip_comment;
using detail::trim;
using detail::try_parse_double;

namespace {

std::string num(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

/// Non-blank, comment-stripped lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    line = strip_comment(line);
    if (!line.empty()) out.emplace_back(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

bool numeric_row(std::string_view line) {
  double d = 0.0;
  const auto f = split_fields(line);
  return !f.empty() && try_parse_double(f.front(), d);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

DriveCycle parse_cycle(std::string_view text) {
  std::vector<double> t, v;
  bool first = true;
  for (const auto& [no, line] : content_lines(text)) {
    if (first && !numeric_row(line)) {
      first = false;
      continue;
    }
    first = false;
    const auto f = split_fields(line);
    if (f.size() != 2) throw ParseError("cycle rows need 2 fields, got " + std::to_string(f.size()), no);
    const double ti = parse_double(f[0], no);
    const double vi = parse_double(f[1], no);
    if (vi < 0.0) throw ParseError("negative speed", no);
    if (t.empty() && ti != 0.0) throw ParseError("cycle must start at t = 0", no);
    if (!t.empty() && !(ti > t.back())) throw ParseError("time not strictly increasing", no);
    t.push_back(ti);
    v.push_back(vi / 3.6);
  }
  return DriveCycle(std::move(t), std::move(v));
}

DriveCycle load_cycle(const fs::path& path) { return parse_cycle(read_text(path)); }

Grid2D parse_grid(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("grid: empty file");
  const auto head = split_fields(lines.front().second);
  if (head.size() < 2) throw ParseError("grid: header needs a corner cell and breakpoints", lines.front().first);
  std::vector<double> cols;
  for (std::size_t j = 1; j < head.size(); ++j) cols.push_back(parse_double(head[j], lines.front().first));
  std::vector<double> rows, values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [no, line] = lines[i];
    const auto f = split_fields(line);
    if (f.size() != head.size()) {
      throw ParseError("grid: ragged row " + std::to_string(i) + " (" + std::to_string(f.size()) +
                           " fields, expected " + std::to_string(head.size()) + ")",
                       no);
    }
    rows.push_back(parse_double(f[0], no));
    for (std::size_t j = 1; j < f.size(); ++j) values.push_back(parse_double(f[j], no));
  }
  if (rows.empty()) throw ParseError("grid: no data rows");
  try {
    return Grid2D(std::move(rows), std::move(cols), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Grid2D load_grid(const fs::path& path) { return parse_grid(read_text(path)); }

std::string format_grid(const Grid2D& g) {
  std::string out = "tau\\omega";
  for (double c : g.col_breaks()) out += "," + num(c);
  out += '\n';
  for (std::size_t i = 0; i < g.row_breaks().size(); ++i) {
    out += num(g.row_breaks()[i]);
    for (std::size_t j = 0; j < g.col_breaks().size(); ++j) out += "," + num(g.at(i, j));
    out += '\n';
  }
  return out;
}

std::vector<Curve> parse_curves(std::string_view text, std::size_t y_columns) {
  std::vector<double> x;
  std::vector<std::vector<double>> ys(y_columns);
  bool first = true;
  for (const auto& [no, line] : content_lines(text)) {
    if (first && !numeric_row(line)) {
      first = false;
      continue;
    }
    first = false;
    const auto f = split_fields(line);
    if (f.size() != y_columns + 1) {
      throw ParseError("curve rows need " + std::to_string(y_columns + 1) + " fields", no);
    }
    const double xi = parse_double(f[0], no);
    if (!x.empty() && !(xi > x.back())) throw ParseError("breakpoints not strictly increasing", no);
    x.push_back(xi);
    for (std::size_t j = 0; j < y_columns; ++j) ys[j].push_back(parse_double(f[j + 1], no));
  }
  if (x.empty()) throw ParseError("curve: no data rows");
  std::vector<Curve> out;
  for (auto& y : ys) out.emplace_back(x, std::move(y));
  return out;
}

std::vector<Curve> load_curves(const fs::path& path, std::size_t y_columns) {
  return parse_curves(read_text(path), y_columns);
}

CellCurves load_cell_curves(const fs::path& path) {
  auto c = load_curves(path, 2);
  return {std::move(c[0]), std::move(c[1])};
}

std::string format_cell_curves(const Curve& ocv, const Curve& r0) {
  std::string out = "soc,v_oc_cell,r0_cell\n";
  for (std::size_t i = 0; i < ocv.x().size(); ++i) {
    out += num(ocv.x()[i]) + "," + num(ocv.y()[i]) + "," + num(r0(ocv.x()[i])) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

struct Binder {
  std::map<std::string, std::function<void(std::string_view, std::size_t)>> set;
  std::vector<std::pair<std::string, std::function<std::string()>>> get;  // for formatting, ordered

  void real(const std::string& key, double& ref) {
    set[key] = [&ref](std::string_view v, std::size_t no) { ref = parse_double(v, no); };
    get.emplace_back(key, [&ref] { return num(ref); });
  }
  void integer(const std::string& key, int& ref) {
    set[key] = [&ref, key](std::string_view v, std::size_t no) {
      const double d = parse_double(v, no);
      if (d != std::floor(d)) throw ParseError("'" + key + "' must be an integer", no);
      ref = static_cast<int>(d);
    };
    get.emplace_back(key, [&ref] { return std::to_string(ref); });
  }
};

struct ConfigBinding {
  std::map<std::string, Binder> sections;

  explicit ConfigBinding(SimConfig& c) {
    auto& veh = sections["vehicle"];
    veh.real("dt", c.dt);

    auto& r = sections["reference"];
    r.real("T0", c.ref.T0);
    r.real("P0", c.ref.P0);
    for (const auto& [name, f] : c.ref.fractions) {
      r.real("f_" + name, c.ref.fractions[name]);
    }

    auto& ch = sections["chassis"];
    ch.real("mass", c.chassis.mass);
    ch.real("frontal_area", c.chassis.frontal_area);
    ch.real("drag_coeff", c.chassis.drag_coeff);
    ch.real("roll_coeff", c.chassis.roll_coeff);
    ch.real("wheel_radius", c.chassis.wheel_radius);
    ch.real("air_density", c.chassis.air_density);
    ch.real("gravity", c.chassis.gravity);
    ch.real("diff_efficiency", c.chassis.diff_efficiency);

    auto& b = sections["battery"];
    b.real("q_nom_cell", c.cell.q_nom);
    b.real("v_nom_cell", c.cell.v_nom);
    b.real("heat_capacity_cell", c.cell.heat_capacity);
    b.real("h_out_cell", c.cell.h_out);
    b.real("v_min_cell", c.cell.v_min);
    b.real("v_max_cell", c.cell.v_max);
    b.integer("n_series", c.n_series);
    b.integer("n_parallel", c.n_parallel);
    b.real("soe0", c.soe0);
    b.real("t_init", c.t_batt0);

    auto& m = sections["motor"];
    m.integer("count", c.motor_count);
    m.real("ratio", c.motor_ratio);
    m.real("tau_max", c.motor.tau_max);
    m.real("p_max", c.motor.p_max);
    m.real("r_s0", c.motor.r_s0);
    m.real("xi", c.motor.xi);
    m.real("l_d", c.motor.l_d);
    m.real("l_q", c.motor.l_q);
    m.real("lambda_pm", c.motor.lambda_pm);
    m.integer("n_pp", c.motor.n_pp);
    m.real("k_h", c.motor.k_h);
    m.real("k_f", c.motor.k_f);
    m.real("c_copper", c.motor.c_copper);
    m.real("c_iron", c.motor.c_iron);
    m.real("h_copper", c.motor.h_copper);
    m.real("h_iron", c.motor.h_iron);
    m.real("alpha", c.motor.alpha);
    m.real("beta", c.motor.beta);
    m.real("t_init", c.t_mot0);

    auto& e = sections["engine"];
    e.real("ratio", c.engine_ratio);
    e.real("omega_min", c.engine.omega_min);
    e.real("omega_max", c.engine.omega_max);
    e.integer("x", c.engine.x);
    e.integer("y", c.engine.y);
    e.real("lhv", c.engine.lhv);
    e.real("afr_stoich", c.engine.afr_stoich);
    e.real("v_tank", c.engine.v_tank);
    e.real("rho_fuel", c.engine.rho_fuel);
    e.real("bore", c.engine.bore);
    e.real("v_d", c.engine.v_d);
    e.real("t_eng", c.engine.t_eng);
    e.real("t_c", c.engine.t_c);
    e.real("k_g", c.engine.k_g);
    e.real("mu_g", c.engine.mu_g);
    e.real("a", c.engine.a);
    e.real("b", c.engine.b);
    e.real("t_exh", c.engine.t_exh);
    e.real("fmep_c0", c.engine.fmep_c0);
    e.real("fmep_c1", c.engine.fmep_c1);
    e.real("fmep_c2", c.engine.fmep_c2);

    auto& d = sections["driver"];
    d.real("kp", c.driver.kp);
    d.real("ki", c.driver.ki);
    d.real("max_traction", c.driver.max_traction);
    d.real("max_brake", c.driver.max_brake);

    auto& s = sections["ecms"];
    s.real("s_charge", c.ecms.s_charge);
    s.real("s_discharge", c.ecms.s_discharge);
    s.real("soc_ref", c.ecms.soc_ref);
    s.real("k_soc", c.ecms.k_soc);
    s.integer("candidates", c.ecms.candidates);
  }
};

const std::map<std::string, std::string>& table_keys() {
  static const std::map<std::string, std::string> k{{"battery.curves", "cell_curves"},
                                                    {"motor.map", "motor_map"},
                                                    {"engine.fuel_map", "fuel_map"},
                                                    {"engine.torque_curve", "torque_curve"}};
  return k;
}

struct Entry {
  std::size_t line;
  std::string section;
  std::string key;
  std::string value;
};

std::vector<Entry> parse_entries(std::string_view text) {
  std::vector<Entry> out;
  std::string section;
  for (const auto& [no, line] : content_lines(text)) {
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", no);
      section = lower(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", no);
    const auto key = std::string(trim(line.substr(0, eq)));
    const auto value = std::string(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("empty key", no);
    if (section.empty()) throw ParseError("key '" + key + "' outside a section", no);
    out.push_back({no, section, key, value});
  }
  return out;
}

}  // namespace

SimConfig parse_config(std::string_view text, const fs::path& base_dir) {
  const auto entries = parse_entries(text);
  Architecture arch = Architecture::EV;
  for (const auto& e : entries) {
    if (e.section == "vehicle" && e.key == "architecture") arch = architecture_from_name(e.value);
  }
  SimConfig cfg = preset(arch);
  ConfigBinding bind(cfg);
  for (const auto& e : entries) {
    if (e.section == "vehicle" && e.key == "architecture") continue;
    const auto tk = table_keys().find(e.section + "." + e.key);
    if (tk != table_keys().end()) {
      const fs::path p = base_dir / e.value;
      if (tk->second == "cell_curves") {
        auto c = load_cell_curves(p);
        cfg.cell.ocv = std::move(c.ocv);
        cfg.cell.r0 = std::move(c.r0);
      } else if (tk->second == "motor_map") {
        cfg.motor.eff_map = load_grid(p);
      } else if (tk->second == "fuel_map") {
        cfg.engine.fuel_map = load_grid(p);
      } else {
        cfg.engine.max_torque = load_curves(p, 1).front();
      }
      continue;
    }
    const auto sec = bind.sections.find(e.section);
    if (sec == bind.sections.end()) throw ConfigError("unknown section [" + e.section + "]");
    const auto key = sec->second.set.find(e.key);
    if (key == sec->second.set.end()) {
      throw ConfigError("unknown key '" + e.key + "' in [" + e.section + "] (line " + std::to_string(e.line) + ")");
    }
    key->second(e.value, e.line);
  }
  cfg.validate();
  return cfg;
}

SimConfig load_config(const fs::path& path) { return parse_config(read_text(path), path.parent_path()); }

std::string format_config(const SimConfig& cfg, const TableFiles& files) {
  SimConfig copy = cfg;
  ConfigBinding bind(copy);
  std::string out;
  const std::vector<std::string> order{"vehicle", "reference", "chassis", "battery", "motor",
                                       "engine", "driver", "ecms"};
  for (const auto& name : order) {
    if (!copy.has_engine() && (name == "engine" || name == "ecms")) continue;
    out += "[" + name + "]\n";
    if (name == "vehicle") out += "architecture = " + std::string(architecture_name(copy.architecture)) + "\n";
    for (const auto& [key, get] : bind.sections[name].get) out += key + " = " + get() + "\n";
    if (name == "battery" && !files.cell_curves.empty()) out += "curves = " + files.cell_curves + "\n";
    if (name == "motor" && !files.motor_map.empty()) out += "map = " + files.motor_map + "\n";
    if (name == "engine" && !files.fuel_map.empty()) out += "fuel_map = " + files.fuel_map + "\n";
    if (name == "engine" && !files.torque_curve.empty()) out += "torque_curve = " + files.torque_curve + "\n";
    out += "\n";
  }
  return out;
}

RunManifest parse_manifest(std::string_view text, const fs::path& base_dir) {
  RunManifest m;
  for (const auto& e : parse_entries(text)) {
    if (e.section != "run") throw ConfigError("unknown manifest section [" + e.section + "]");
    if (e.key == "config") m.config = base_dir / e.value;
    else if (e.key == "cycle") m.cycle = base_dir / e.value;
    else if (e.key == "output") m.output = base_dir / e.value;
    else throw ConfigError("unknown manifest key '" + e.key + "'");
  }
  if (m.config.empty() || m.cycle.empty() || m.output.empty()) {
    throw ConfigError("manifest needs config, cycle and output");
  }
  return m;
}

RunManifest load_manifest(const fs::path& path) { return parse_manifest(read_text(path), path.parent_path()); }

// ---------------------------------------------------------------------------
// Reports

std::vector<double> Table::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no column '" + std::string(name) + "'");
  const auto j = static_cast<std::size_t>(it - header.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[j]);
  return out;
}

Table parse_table(std::string_view text) {
  Table t;
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("table: missing header");
  for (auto f : split_fields(lines.front().second)) t.header.emplace_back(f);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [no, line] = lines[i];
    const auto f = split_fields(line);
    if (f.size() != t.header.size()) throw ParseError("table: ragged row", no);
    std::vector<double> row;
    row.reserve(f.size());
    for (auto tok : f) row.push_back(parse_double(tok, no));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table load_table(const fs::path& path) { return parse_table(read_text(path)); }

std::string format_timeseries(const SimResult& r) {
  const auto& s = r.series;
  std::string out =
      "t,v_target,v,soc,soe,c_rate,t_batt,t_mot,v_eval,f_trac,f_brake,u_split,tau_mot,tau_eng,p_batt,"
      "mdot_fuel,x_veh,x_rel,s_gen_batt,s_gen_mot";
  for (std::size_t i = 0; i < kTermCount; ++i) out += ",rate_" + std::string(term_id(static_cast<Term>(i)));
  out += '\n';
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (double v : {s.t[k], s.v_target[k], s.v[k], s.soc[k], s.soe[k], s.c_rate[k], s.t_batt[k], s.t_mot[k],
                     s.v_eval[k], s.f_trac[k], s.f_brake[k], s.u_split[k], s.tau_mot[k], s.tau_eng[k],
                     s.p_batt[k], s.mdot_fuel[k], s.x_veh[k], s.x_rel[k], s.s_gen_batt[k], s.s_gen_mot[k]}) {
      out += num(v) + ",";
    }
    for (std::size_t i = 0; i < kTermCount; ++i) {
      out += num(s.rates[k][i]);
      out += i + 1 < kTermCount ? "," : "\n";
    }
  }
  return out;
}

std::string format_summary(const SimResult& r) {
  const auto& s = r.summary;
  std::string out;
  out += "architecture = " + std::string(architecture_name(r.architecture)) + "\n";
  out += "steps = " + std::to_string(r.series.size() == 0 ? 0 : r.series.size() - 1) + "\n";
  out += "delta_soe = " + num(s.delta_soe) + "\n";
  out += "delta_soc = " + num(s.delta_soc) + "\n";
  out += "delta_x_rel = " + num(s.delta_x_rel) + "\n";
  out += "fuel_mass_kg = " + num(s.fuel_mass) + "\n";
  out += "max_tracking_error_kmh = " + num(3.6 * s.max_tracking_error) + "\n";
  out += "powertrain_loss_J = " + num(-s.powertrain_loss) + "\n";
  out += "total_loss_J = " + num(s.losses.total_loss) + "\n";
  out += "\n# loss breakdown [% of X_veh(0) - X_veh(t_f)]\n";
  for (const auto& e : s.losses.entries) out += e.group + " = " + num(e.percent) + "\n";
  return out;
}

std::string format_ledger_json(const SimResult& r) {
  nlohmann::ordered_json j;
  j["architecture"] = architecture_name(r.architecture);
  j["x_veh_initial_J"] = r.ledger.initial();
  j["x_veh_final_J"] = r.ledger.x_veh().empty() ? r.ledger.initial() : r.ledger.x_veh().back();
  j["x_max_J"] = r.ledger.x_max();
  auto& terms = j["terms_J"];
  terms = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kTermCount; ++i) {
    const auto t = static_cast<Term>(i);
    terms[std::string(term_id(t))] = r.ledger.total(t);
  }
  j["balance_J"] = r.ledger.balance();
  auto& losses = j["losses"];
  losses = nlohmann::ordered_json::array();
  for (const auto& e : r.summary.losses.entries) {
    losses.push_back({{"group", e.group}, {"joules", e.joules}, {"percent", e.percent}});
  }
  j["delta_soe"] = r.summary.delta_soe;
  j["delta_x_rel"] = r.summary.delta_x_rel;
  j["fuel_mass_kg"] = r.summary.fuel_mass;
  return j.dump(2) + "\n";
}

void emit_report(const SimResult& r, const fs::path& outdir) {
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create '" + outdir.string() + "': " + ec.message());
  write_text(outdir / "timeseries.csv", format_timeseries(r));
  write_text(outdir / "summary.txt", format_summary(r));
  write_text(outdir / "ledger.json", format_ledger_json(r));
}

}  // namespace exsim
