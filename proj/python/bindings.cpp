#include <algorithm>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "exsim/config.hpp"
#include "exsim/cycle.hpp"
#include "exsim/error.hpp"
#include "exsim/io.hpp"
#include "exsim/sim.hpp"

namespace py = pybind11;
using namespace exsim;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::dict series_dict(const TimeSeries& s) {
  py::dict d;
  d["t"] = to_array(s.t);
  d["v_target"] = to_array(s.v_target);
  d["v"] = to_array(s.v);
  d["soc"] = to_array(s.soc);
  d["soe"] = to_array(s.soe);
  d["c_rate"] = to_array(s.c_rate);
  d["t_batt"] = to_array(s.t_batt);
  d["t_mot"] = to_array(s.t_mot);
  d["v_eval"] = to_array(s.v_eval);
  d["f_trac"] = to_array(s.f_trac);
  d["f_brake"] = to_array(s.f_brake);
  d["u_split"] = to_array(s.u_split);
  d["tau_mot"] = to_array(s.tau_mot);
  d["tau_eng"] = to_array(s.tau_eng);
  d["p_batt"] = to_array(s.p_batt);
  d["mdot_fuel"] = to_array(s.mdot_fuel);
  d["x_veh"] = to_array(s.x_veh);
  d["x_rel"] = to_array(s.x_rel);
  d["s_gen_batt"] = to_array(s.s_gen_batt);
  d["s_gen_mot"] = to_array(s.s_gen_mot);
  return d;
}

py::dict summary_dict(const Summary& s) {
  py::dict d;
  d["delta_soe"] = s.delta_soe;
  d["delta_soc"] = s.delta_soc;
  d["delta_x_rel"] = s.delta_x_rel;
  d["fuel_mass_kg"] = s.fuel_mass;
  d["max_tracking_error_ms"] = s.max_tracking_error;
  d["powertrain_loss_J"] = -s.powertrain_loss;
  d["x_batt_max_J"] = s.x_batt_max;
  d["x_fuel_max_J"] = s.x_fuel_max;
  d["inconsistent_engine_steps"] = s.inconsistent_engine_steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exergy-accounting powertrain simulator";

  py::register_exception<ModelError>(m, "ModelError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<SimulationError>(m, "SimulationError", PyExc_RuntimeError);

  py::class_<SimConfig>(m, "Config")
      .def_property_readonly("architecture",
                             [](const SimConfig& c) { return std::string(architecture_name(c.architecture)); })
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("soe0", &SimConfig::soe0)
      .def_readwrite("n_series", &SimConfig::n_series)
      .def_readwrite("n_parallel", &SimConfig::n_parallel)
      .def_property(
          "mass", [](const SimConfig& c) { return c.chassis.mass; },
          [](SimConfig& c, double v) { c.chassis.mass = v; })
      .def_property(
          "engine_a", [](const SimConfig& c) { return c.engine.a; }, [](SimConfig& c, double v) { c.engine.a = v; })
      .def_property(
          "soc_ref", [](const SimConfig& c) { return c.ecms.soc_ref; },
          [](SimConfig& c, double v) { c.ecms.soc_ref = v; })
      .def_property_readonly("pack_energy_kwh", [](const SimConfig& c) { return c.pack().e_nom / 3.6e6; })
      .def("validate", &SimConfig::validate)
      .def("to_ini", [](const SimConfig& c) { return format_config(c); });

  py::class_<DriveCycle>(m, "Cycle")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("t"), py::arg("v"))
      .def_property_readonly("t", [](const DriveCycle& c) { return to_array(c.times()); })
      .def_property_readonly("v", [](const DriveCycle& c) { return to_array(c.speeds()); })
      .def_property_readonly("duration", &DriveCycle::duration)
      .def("speed_at", &DriveCycle::speed_at)
      .def("__len__", &DriveCycle::size);

  py::class_<SimResult>(m, "Result")
      .def_property_readonly("architecture",
                             [](const SimResult& r) { return std::string(architecture_name(r.architecture)); })
      .def_property_readonly("series", [](const SimResult& r) { return series_dict(r.series); })
      .def_property_readonly("summary", [](const SimResult& r) { return summary_dict(r.summary); })
      .def_property_readonly("ledger",
                             [](const SimResult& r) {
                               py::dict d;
                               for (std::size_t i = 0; i < kTermCount; ++i) {
                                 const auto t = static_cast<Term>(i);
                                 d[py::str(std::string(term_id(t)))] = r.ledger.total(t);
                               }
                               return d;
                             })
      .def_property_readonly("balance", [](const SimResult& r) { return r.ledger.balance(); })
      .def_property_readonly("losses",
                             [](const SimResult& r) {
                               py::dict d;
                               for (const auto& e : r.summary.losses.entries) d[py::str(e.group)] = e.percent;
                               return d;
                             })
      .def("summary_text", [](const SimResult& r) { return format_summary(r); })
      .def("timeseries_csv", [](const SimResult& r) { return format_timeseries(r); })
      .def("emit_report", [](const SimResult& r, const std::filesystem::path& dir) { emit_report(r, dir); });

  m.def("ev_preset", &ev_preset);
  m.def("hev_preset", &hev_preset);
  m.def("load_config", &load_config, py::arg("path"));
  m.def("load_cycle", &load_cycle, py::arg("path"));
  m.def("run", &run, py::arg("config"), py::arg("cycle"), py::call_guard<py::gil_scoped_release>());
  m.def("calibrate_heat_coefficient", &calibrate_heat_coefficient, py::arg("config"), py::arg("cycle"),
        py::arg("target") = 0.10);
}
