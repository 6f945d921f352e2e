#include <gtest/gtest.h>

#include "exsim/error.hpp"
#include "exsim/io.hpp"
#include "support.hpp"

using namespace exsim;

TEST(CycleFile, ParsesHeaderCommentsAndUnits) {
  const auto c = parse_cycle("# comment\nt_s,v_kmh\n0,0\n1, 36\n\n2;72\n");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_DOUBLE_EQ(c.speeds()[1], 10.0);
  EXPECT_DOUBLE_EQ(c.speeds()[2], 20.0);
}

TEST(CycleFile, ReportsLineOfMalformedRow) {
  try {
    parse_cycle("t,v\n0,0\n1,abc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_cycle("0,0\n1,2,3\n"), ParseError);
  EXPECT_THROW(parse_cycle("0,0\n0,5\n"), ParseError);
  EXPECT_THROW(parse_cycle("1,0\n2,5\n"), ParseError);
  EXPECT_THROW(parse_cycle("0,0\n1,-5\n"), ParseError);
  EXPECT_THROW(load_cycle("/nonexistent/cycle.csv"), IoError);
}

TEST(GridFile, RoundTripIsExact) {
  const auto g = ev_preset().motor.eff_map;
  const auto back = parse_grid(format_grid(g));
  ASSERT_EQ(back.values().size(), g.values().size());
  for (std::size_t i = 0; i < g.values().size(); ++i) EXPECT_EQ(back.values()[i], g.values()[i]);
  for (std::size_t i = 0; i < g.row_breaks().size(); ++i) EXPECT_EQ(back.row_breaks()[i], g.row_breaks()[i]);
}

TEST(GridFile, RejectsRaggedAndNonMonotone) {
  EXPECT_THROW(parse_grid("x,0,1\n0,1,2\n1,3\n"), ParseError);
  EXPECT_THROW(parse_grid("x,1,0\n0,1,2\n"), ParseError);
  EXPECT_THROW(parse_grid("x,0,1\n0,1,inf\n"), ParseError);
  EXPECT_THROW(parse_grid(""), ParseError);
}

TEST(CurveFile, CellCurvesRoundTrip) {
  const auto c = ev_preset().cell;
  const auto dir = test::scratch_dir("curves");
  write_text(dir / "cell.csv", format_cell_curves(c.ocv, c.r0));
  const auto back = load_cell_curves(dir / "cell.csv");
  for (double s = 0.0; s <= 1.0; s += 0.01) {
    EXPECT_EQ(back.ocv(s), c.ocv(s));
    EXPECT_EQ(back.r0(s), c.r0(s));
  }
  EXPECT_THROW(parse_curves("0,1\n0,2\n", 1), std::exception);
  EXPECT_THROW(parse_curves("0,1,2\n", 1), ParseError);
}

TEST(ConfigFile, ShippedConfigsReproducePresets) {
  for (auto arch : {Architecture::EV, Architecture::HEV}) {
    const auto name = std::string(architecture_name(arch));
    const auto cfg = load_config(test::data_dir() / "config" / (name + ".ini"));
    const auto cycle = test::synthetic_cycle();
    EXPECT_EQ(format_timeseries(run(cfg, cycle)), format_timeseries(run(preset(arch), cycle))) << name;
  }
}

TEST(ConfigFile, OverridesOnTopOfPreset) {
  const auto cfg = parse_config("[vehicle]\narchitecture = HEV\ndt = 0.5\n[chassis]\nmass = 1500\n");
  EXPECT_EQ(cfg.architecture, Architecture::HEV);
  EXPECT_DOUBLE_EQ(cfg.dt, 0.5);
  EXPECT_DOUBLE_EQ(cfg.chassis.mass, 1500.0);
  EXPECT_EQ(cfg.n_series, 55);
}

TEST(ConfigFile, Errors) {
  EXPECT_THROW(parse_config("[chassis]\nmass_kg = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[gearbox]\nratio = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[vehicle]\narchitecture = fcev\n"), ConfigError);
  EXPECT_THROW(parse_config("[chassis]\nmass = -1\n"), ConfigError);
  EXPECT_THROW(parse_config("[battery]\nn_series = 1.5\n"), ParseError);
  EXPECT_THROW(parse_config("[chassis]\nmass = heavy\n"), ParseError);
  EXPECT_THROW(parse_config("mass = 1\n"), ParseError);
  EXPECT_THROW(parse_config("[chassis\n"), ParseError);
  EXPECT_THROW(parse_config("[motor]\nmap = missing.csv\n", "/nonexistent"), IoError);
}

TEST(Manifest, ResolvesPathsAgainstItsDirectory) {
  const auto m = parse_manifest("[run]\nconfig = c.ini\ncycle = k.csv\noutput = out\n", "/base");
  EXPECT_EQ(m.config, std::filesystem::path("/base/c.ini"));
  EXPECT_EQ(m.output, std::filesystem::path("/base/out"));
  EXPECT_THROW(parse_manifest("[run]\nconfig = c.ini\n"), ConfigError);
  EXPECT_THROW(parse_manifest("[run]\nseed = 1\n"), ConfigError);
}

TEST(Report, TimeseriesCarriesEveryLedgerRate) {
  const auto r = run(ev_preset(), test::synthetic_cycle());
  const auto t = parse_table(format_timeseries(r));
  EXPECT_EQ(t.rows.size(), r.series.size());
  const auto roll = t.column("rate_E_roll");
  double sum = 0.0;
  for (std::size_t i = 1; i < roll.size(); ++i) sum += roll[i] * (r.series.t[i] - r.series.t[i - 1]);
  EXPECT_NEAR(sum, r.ledger.total(Term::Rolling), 1e-9 * std::abs(sum));
  EXPECT_THROW(t.column("nope"), std::out_of_range);
}

TEST(Report, EmitWritesThreeFiles) {
  const auto r = run(hev_preset(), test::synthetic_cycle());
  const auto dir = test::scratch_dir("report") / "nested";
  emit_report(r, dir);
  for (const char* f : {"timeseries.csv", "summary.txt", "ledger.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_NE(read_text(dir / "ledger.json").find("\"X_comb_eng\""), std::string::npos);
}
