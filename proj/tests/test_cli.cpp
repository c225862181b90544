#include "commands.hpp"
#include "config.hpp"

#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace shearcst;
using namespace shearcst::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("shearcst_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Config, ParsesKeyValues) {
  const auto kv = parse_key_values("# comment\ngrid.n = 32\n  t = 0, 0.5 # trailing\n\n");
  EXPECT_EQ(kv.at("grid.n"), "32");
  EXPECT_EQ(kv.at("t"), "0, 0.5");
  RunConfig c;
  cli::apply(c, kv);
  EXPECT_EQ(c.grid_n, 32u);
  EXPECT_EQ(c.times, (std::vector<double>{0.0, 0.5}));
}

TEST(Config, RejectsBadInput) {
  RunConfig c;
  EXPECT_THROW(cli::apply(c, {{"nope", "1"}}), Error);
  EXPECT_THROW(cli::apply(c, {{"grid.n", "abc"}}), Error);
  EXPECT_THROW(parse_key_values("missing equals"), Error);
  c.grid_n = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Config, EnvironmentOverrides) {
  ::setenv("SHEARCST_FIDUCIAL_E", "1.25", 1);
  const auto env = environment_overrides();
  ::unsetenv("SHEARCST_FIDUCIAL_E");
  RunConfig c;
  cli::apply(c, env);
  EXPECT_EQ(c.fiducial.E, 1.25);
}

TEST(Cli, VerifyPassesOnDefaults) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  RunConfig c;
  const Report r = run_verify(c);
  for (const auto& chk : r.checks) EXPECT_TRUE(chk.passed) << chk.name << ' ' << chk.residual;
  c.out = scratch("verify");
  EXPECT_EQ(cmd_verify(c), exit_pass);
  EXPECT_TRUE(std::filesystem::exists(c.out / "verify.csv"));
}

TEST(Cli, VerifyReportsSqueezeOutOfRange) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  RunConfig c;
  c.seed_alpha = 4.0 * std::numbers::pi;
  c.fiducial.E = 5.0;
  const Report r = run_verify(c);
  EXPECT_FALSE(r.passed());
  bool seen = false;
  for (const auto& chk : r.checks) seen = seen || chk.note == "SqueezeOutOfRange";
  EXPECT_TRUE(seen);
}

TEST(Cli, ReportIsDeterministic) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  RunConfig c;
  std::ostringstream a, b;
  write_report(a, run_verify(c), io::Format::json);
  write_report(b, run_verify(c), io::Format::json);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Cli, GSlicesMatchHeisenbergAtCentre) {
  RunConfig c;
  c.fiducial.E = c.params.m_omega();
  c.x2_count = 1;
  c.times = {0.0, 0.8};
  c.out = scratch("evolve");
  c.scenario = Scenario::G;
  ASSERT_EQ(cmd_evolve(c), exit_pass);
  c.scenario = Scenario::heisenberg;
  ASSERT_EQ(cmd_evolve(c), exit_pass);
  for (int k = 0; k < 2; ++k) {
    std::ifstream g(c.out / ("evolve_G_" + std::to_string(k) + ".csv")), h(c.out / ("evolve_heisenberg_" + std::to_string(k) + ".csv"));
    std::string skip;
    std::getline(g, skip);
    std::getline(h, skip);
    const auto a = io::read_volume(g, io::Format::csv), b = io::read_volume(h, io::Format::csv);
    for (std::size_t n = 0; n < a[0].values.size(); ++n) EXPECT_NEAR(std::abs(a[0].values[n] - b[0].values[n]), 0.0, 1e-10);
  }
}

TEST(Cli, SpectrumTable) {
  RunConfig c;
  c.j_max = 0;
  c.out = scratch("spectrum");
  ASSERT_EQ(cmd_spectrum(c), exit_pass);
  std::ifstream in(c.out / "spectrum.csv");
  const auto t = io::read_table(in, io::Format::csv);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][2], 0.5);
  c.j_max = 17;
  EXPECT_THROW(cmd_spectrum(c), Error);
}

TEST(Cli, GeometryFiles) {
  RunConfig c;
  c.out = scratch("geometry");
  ASSERT_EQ(cmd_geometry(c), exit_pass);
  std::ifstream in(c.out / "admissible_arcs.csv");
  const auto arcs = io::read_table(in, io::Format::csv);
  for (const auto& row : arcs.rows) EXPECT_TRUE(row[0] > 0.5 && row[0] < 2.0);
  EXPECT_FALSE(arcs.rows.empty());
}
