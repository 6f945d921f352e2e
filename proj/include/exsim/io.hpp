#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "exsim/config.hpp"
#include "exsim/cycle.hpp"
#include "exsim/sim.hpp"
#include "exsim/tables.hpp"

namespace exsim {

// Delimited text: fields separated by ',', ';' or blanks; '#' starts a
// comment. Readers throw ParseError (with the 1-based line) on malformed
// content and IoError when the file cannot be opened.

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Two columns: time [s], speed [km/h]. A non-numeric first line is
/// taken as a header. Speeds are converted to m/s.
DriveCycle parse_cycle(std::string_view text);
DriveCycle load_cycle(const std::filesystem::path& path);

/// First row: column breakpoints after a corner cell; following rows: row
/// breakpoint then one value per column.
Grid2D parse_grid(std::string_view text);
Grid2D load_grid(const std::filesystem::path& path);
std::string format_grid(const Grid2D& g);

/// Breakpoint table: x then one or more y columns, x strictly increasing.
/// Returns one curve per y column.
std::vector<Curve> parse_curves(std::string_view text, std::size_t y_columns);
std::vector<Curve> load_curves(const std::filesystem::path& path, std::size_t y_columns);

/// SoC, V_oc_cell, R_0_cell.
struct CellCurves {
  Curve ocv;
  Curve r0;
};
CellCurves load_cell_curves(const std::filesystem::path& path);
std::string format_cell_curves(const Curve& ocv, const Curve& r0);

/// Sectioned key = value configuration. The [vehicle] architecture key
/// selects the preset every other key overrides; map and curve paths are
/// resolved against `base_dir`. Unknown sections or keys are ConfigError.
SimConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = ".");
SimConfig load_config(const std::filesystem::path& path);

/// Scalar parameters as configuration text. Tables are referenced by the
/// given file names when non-empty and omitted otherwise.
struct TableFiles {
  std::string cell_curves;
  std::string motor_map;
  std::string fuel_map;
  std::string torque_curve;
};
std::string format_config(const SimConfig& cfg, const TableFiles& files = {});

struct RunManifest {
  std::filesystem::path config;
  std::filesystem::path cycle;
  std::filesystem::path output;
};
/// [run] section with config, cycle and output, relative to `base_dir`.
RunManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir = ".");
RunManifest load_manifest(const std::filesystem::path& path);

/// Header plus numeric columns of a delimited table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column by header name; throws std::out_of_range.
  std::vector<double> column(std::string_view name) const;
};
Table parse_table(std::string_view text);
Table load_table(const std::filesystem::path& path);

std::string format_timeseries(const SimResult& r);
std::string format_summary(const SimResult& r);
std::string format_ledger_json(const SimResult& r);

/// Writes timeseries.csv, summary.txt and ledger.json into `outdir`
/// (created if needed). Throws IoError when it cannot be written.
void emit_report(const SimResult& r, const std::filesystem::path& outdir);

}  // namespace exsim
