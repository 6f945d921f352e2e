#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "exsim/io.hpp"
#include "support.hpp"

using namespace exsim;

namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string(EXSIM_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::filesystem::path manifest(const std::filesystem::path& dir, const std::string& config,
                               const std::string& cycle) {
  write_text(dir / "run.ini", "[run]\nconfig = " + config + "\ncycle = " + cycle + "\noutput = out\n");
  return dir / "run.ini";
}

}  // namespace

TEST(Cli, RunWritesReports) {
  const auto dir = test::scratch_dir("cli_run");
  const auto cfg = (test::data_dir() / "config/hev.ini").string();
  const auto cyc = (test::data_dir() / "cycles/synthetic_mixed.csv").string();
  EXPECT_EQ(cli("run " + manifest(dir, cfg, cyc).string()), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "out/ledger.json"));
  EXPECT_EQ(cli("run " + (dir / "run.ini").string() + " --arch hev --dt 0.5"), 0);
}

TEST(Cli, ExitCodes) {
  const auto dir = test::scratch_dir("cli_codes");
  const auto cfg = (test::data_dir() / "config/ev.ini").string();
  const auto cyc = (test::data_dir() / "cycles/synthetic_mixed.csv").string();

  write_text(dir / "bad.ini", "[chassis]\nwheels = 4\n");
  EXPECT_EQ(cli("run " + manifest(dir, "bad.ini", cyc).string()), 2);
  EXPECT_EQ(cli("run " + manifest(dir, cfg, cyc).string() + " --arch hev"), 2);

  write_text(dir / "bad.csv", "t,v\n0,0\n1,fast\n");
  EXPECT_EQ(cli("run " + manifest(dir, cfg, "bad.csv").string()), 3);

  write_text(dir / "flat.ini", "[vehicle]\narchitecture = ev\n[battery]\nsoe0 = 0.0001\n");
  EXPECT_EQ(cli("run " + manifest(dir, "flat.ini", cyc).string()), 4);

  EXPECT_EQ(cli("run " + manifest(dir, cfg, "missing.csv").string()), 5);
  EXPECT_NE(cli("frobnicate"), 0);
}

TEST(Cli, InspectAndCalibrate) {
  EXPECT_EQ(cli("inspect --arch hev"), 0);
  EXPECT_EQ(cli("inspect --config " + (test::data_dir() / "config/ev.ini").string()), 0);
  EXPECT_EQ(cli("calibrate-a " + (test::data_dir() / "cycles/synthetic_mixed.csv").string()), 0);
  EXPECT_EQ(cli("calibrate-a " + (test::data_dir() / "cycles/synthetic_mixed.csv").string() + " --config " +
                (test::data_dir() / "config/ev.ini").string()),
            2);
}

TEST(Cli, DumpDefaultsMatchesShippedData) {
  const auto dir = test::scratch_dir("cli_dump");
  ASSERT_EQ(cli("dump-defaults " + dir.string()), 0);
  for (const char* f : {"config/ev.ini", "config/hev.ini", "maps/engine_fuel_synthetic.csv",
                        "maps/cell_nmc_synthetic.csv"}) {
    EXPECT_EQ(read_text(dir / f), read_text(test::data_dir() / f)) << f;
  }
}
