#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "exsim/config.hpp"
#include "exsim/defaults.hpp"
#include "exsim/error.hpp"
#include "exsim/io.hpp"
#include "exsim/sim.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kConfig = 2, kParse = 3, kSimulation = 4, kIo = 5 };

void apply_overrides(exsim::SimConfig& cfg, const std::optional<double>& dt, const std::string& arch) {
  if (!arch.empty()) {
    const auto a = exsim::architecture_from_name(arch);
    if (a != cfg.architecture) throw exsim::ConfigError("config is " + std::string(exsim::architecture_name(cfg.architecture)) +
                                                        ", --arch asks for " + arch);
  }
  if (dt) cfg.dt = *dt;
  cfg.validate();
}

exsim::SimConfig config_or_preset(const std::string& path, const std::string& arch) {
  if (!path.empty()) return exsim::load_config(path);
  return exsim::preset(exsim::architecture_from_name(arch.empty() ? "ev" : arch));
}

void dump_defaults(const fs::path& dir) {
  fs::create_directories(dir / "maps");
  fs::create_directories(dir / "config");
  const auto ev = exsim::ev_preset();
  const auto hev = exsim::hev_preset();
  const std::string tag = "# synthetic default table, not measured data\n";
  exsim::write_text(dir / "maps/cell_nmc_synthetic.csv", tag + exsim::format_cell_curves(ev.cell.ocv, ev.cell.r0));
  exsim::write_text(dir / "maps/ev_motor_eff_synthetic.csv", tag + exsim::format_grid(ev.motor.eff_map));
  exsim::write_text(dir / "maps/hev_motor_eff_synthetic.csv", tag + exsim::format_grid(hev.motor.eff_map));
  exsim::write_text(dir / "maps/engine_fuel_synthetic.csv", tag + exsim::format_grid(hev.engine.fuel_map));
  std::string torque = tag + "omega_rad_s,tau_max_nm\n";
  for (std::size_t i = 0; i < hev.engine.max_torque.x().size(); ++i) {
    torque += std::to_string(hev.engine.max_torque.x()[i]) + "," + std::to_string(hev.engine.max_torque.y()[i]) + "\n";
  }
  exsim::write_text(dir / "maps/engine_torque_synthetic.csv", torque);
  exsim::write_text(dir / "config/ev.ini",
                    exsim::format_config(ev, {"../maps/cell_nmc_synthetic.csv", "../maps/ev_motor_eff_synthetic.csv", "", ""}));
  exsim::write_text(dir / "config/hev.ini",
                    exsim::format_config(hev, {"../maps/cell_nmc_synthetic.csv", "../maps/hev_motor_eff_synthetic.csv",
                                               "../maps/engine_fuel_synthetic.csv",
                                               "../maps/engine_torque_synthetic.csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exsim: exergy-accounting forward simulator for EV and parallel HEV powertrains"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::optional<double> dt;
  std::string arch;
  auto* run = app.add_subcommand("run", "Simulate a manifest and write the reports");
  run->add_option("manifest", manifest_path, "Run manifest ([run] config, cycle, output)")->required();
  run->add_option("--dt", dt, "Time step override [s]");
  run->add_option("--arch", arch, "Expected architecture (ev|hev)");

  std::string cal_config, cal_cycle;
  double cal_target = 0.10;
  auto* cal = app.add_subcommand("calibrate-a", "Calibrate the engine heat-transfer coefficient on a cycle");
  cal->add_option("cycle", cal_cycle, "Reference cycle (s, km/h)")->required();
  cal->add_option("--config", cal_config, "HEV configuration (default: HEV preset)");
  cal->add_option("--target", cal_target, "Heat-to-fuel exergy ratio")->capture_default_str();
  cal->add_option("--dt", dt, "Time step override [s]");

  std::string insp_config;
  auto* inspect = app.add_subcommand("inspect", "Print the parsed configuration");
  inspect->add_option("--config", insp_config, "Configuration file (default: preset)");
  inspect->add_option("--arch", arch, "Preset or expected architecture (ev|hev)");
  inspect->add_option("--dt", dt, "Time step override [s]");

  std::string dump_dir;
  auto* dump = app.add_subcommand("dump-defaults", "Write the preset configurations and synthetic tables");
  dump->add_option("dir", dump_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto m = exsim::load_manifest(manifest_path);
      auto cfg = exsim::load_config(m.config);
      apply_overrides(cfg, dt, arch);
      const auto cycle = exsim::load_cycle(m.cycle);
      const auto result = exsim::run(cfg, cycle);
      exsim::emit_report(result, m.output);
      std::cout << exsim::format_summary(result);
    } else if (*cal) {
      auto cfg = cal_config.empty() ? exsim::hev_preset() : exsim::load_config(cal_config);
      apply_overrides(cfg, dt, "");
      const auto cycle = exsim::load_cycle(cal_cycle);
      const double a = exsim::calibrate_heat_coefficient(cfg, cycle, cal_target);
      std::printf("a = %.10g\n", a);
    } else if (*inspect) {
      auto cfg = config_or_preset(insp_config, arch);
      apply_overrides(cfg, dt, arch);
      std::cout << exsim::format_config(cfg);
    } else if (*dump) {
      dump_defaults(dump_dir);
    }
  } catch (const exsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const exsim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const exsim::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const exsim::SimulationError& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    return kSimulation;
  } catch (const exsim::ModelError& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    return kSimulation;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
