#include "flowbound/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "flowbound/report.hpp"

using namespace flowbound;

namespace {

const char* kSeedConfig =
    "# seed geometry\n"
    "channel.L = 1.0\n"
    "box.a = 0.8\n"
    "box.b = 0.8\n"
    "box.c = 0.8\n"
    "obstacle.volume = 3.1\n"
    "fluid.viscosity = 1.0\n"
    "inflow.type = analytic\n"
    "inflow.amplitude = 4.0e-8\n";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : row) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FLOWBOUND_CLI_PATH) + " " + args +
                          " >cli_stdout.txt 2>cli_stderr.txt";
  const int raw = std::system(cmd.c_str());
  return WEXITSTATUS(raw);
}

}  // namespace

TEST_CASE("config parsing: happy path and diagnostics") {
  const auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  CHECK(cfg.has_geometry);
  CHECK(cfg.geom.L == 1.0);
  CHECK(cfg.geom.vol_K == 3.1);
  CHECK(cfg.has_fluid);
  CHECK(cfg.viscosity == 1.0);
  CHECK(cfg.inflow.type == "analytic");
  CHECK(!cfg.sweep.present);

  CHECK_THROWS_WITH_AS(config::parse_config_text("bogus.key = 1\n", "x.cfg"),
                       doctest::Contains("x.cfg:1"), config::ConfigError);
  CHECK_THROWS_WITH_AS(config::parse_config_text("channel.L\n", "x.cfg"),
                       doctest::Contains("key = value"), config::ConfigError);
  CHECK_THROWS_WITH_AS(
      config::parse_config_text("channel.L = 1\nbox.a = 0.5\nbox.b = twelve\n"
                                "box.c = 0.5\nobstacle.volume = 0.3\n",
                                "x.cfg"),
      doctest::Contains("not a decimal number"), config::ConfigError);
  CHECK_THROWS_WITH_AS(
      config::parse_config_text("fluid.viscosity = 1\nfluid.viscosity = 2\n", "x.cfg"),
      doctest::Contains("duplicate"), config::ConfigError);
  CHECK_THROWS_WITH_AS(
      config::parse_config_text(
          "inflow.type = sampled\ninflow.amplitude = 1\n", "x.cfg"),
      doctest::Contains("grid_file"), config::ConfigError);

  const char* bad_sweep =
      "sweep.parameter = amplitude\nsweep.lo = 1.0\nsweep.hi = 0.5\nsweep.steps = 5\n";
  CHECK_THROWS_WITH_AS(config::parse_config_text(bad_sweep, "x.cfg"),
                       doctest::Contains("sweep.lo must be < sweep.hi"),
                       config::ConfigError);
  const char* bad_steps =
      "sweep.parameter = amplitude\nsweep.lo = 0.0\nsweep.hi = 0.5\nsweep.steps = 1\n";
  CHECK_THROWS_WITH_AS(config::parse_config_text(bad_steps, "x.cfg"),
                       doctest::Contains("steps"), config::ConfigError);
}

TEST_CASE("cmd_certify: exit codes follow the certification status") {
  const auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  std::ostringstream out;
  CHECK(cli::cmd_certify(cfg, {}, out) == cli::kExitCertified);
  const auto j = report::json::parse(out.str());
  CHECK(j["status"] == "Certified");

  auto big = cfg;
  big.inflow.amplitude = 1.0;
  std::ostringstream out2;
  CHECK(cli::cmd_certify(big, {}, out2) == cli::kExitNotCertified);

  config::RunConfig incomplete;
  std::ostringstream out3;
  CHECK_THROWS_AS(cli::cmd_certify(incomplete, {}, out3), config::ConfigError);

  auto missing_grid = cfg;
  missing_grid.inflow.type = "sampled";
  missing_grid.inflow.grid_file = "no_such_grid.csv";
  std::ostringstream out4;
  CHECK_THROWS_AS(cli::cmd_certify(missing_grid, {}, out4), std::runtime_error);
}

TEST_CASE("cmd_forces emits the force schema") {
  const auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  std::ostringstream out;
  CHECK(cli::cmd_forces(cfg, {}, out) == cli::kExitCertified);
  const auto j = report::json::parse(out.str());
  CHECK(j.contains("q_bounds"));
  CHECK(j.contains("psi"));
  CHECK(j["drag_bound"] == j["lift_bound"]);
}

TEST_CASE("cmd_sweep: amplitude sweep flips certification exactly once") {
  auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  cfg.sweep = {true, "amplitude", 0.0, 2e-7, 41};
  std::ostringstream out;
  CHECK(cli::cmd_sweep(cfg, {}, out) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 42);
  CHECK(lines[0] ==
        "param,phi,threshold,margin,beta,grad_bound_rough,grad_bound_sharp,"
        "drag_bound,lift_bound,status");
  int flips = 0;
  std::string prev;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 10);
    const std::string& status = fields[9];
    CHECK((status == "Certified" || status == "NotCertified"));
    if (!prev.empty() && status != prev) ++flips;
    prev = status;
  }
  CHECK(flips == 1);
}

TEST_CASE("cmd_sweep: viscosity sweep has strictly increasing threshold") {
  auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  cfg.sweep = {true, "viscosity", 0.5, 3.0, 26};
  std::ostringstream out;
  CHECK(cli::cmd_sweep(cfg, {}, out) == 0);
  const auto lines = split_lines(out.str());
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double thr = report::parse_double(split_csv(lines[i])[2]);
    CHECK(thr > prev);
    prev = thr;
  }
}

TEST_CASE("cmd_sweep: box.a sweep marks invalid rows and continues") {
  auto cfg = config::parse_config_text(kSeedConfig, "seed.cfg");
  cfg.sweep = {true, "box.a", 0.85, 1.2, 8};  // crosses a >= L
  std::ostringstream out;
  CHECK(cli::cmd_sweep(cfg, {}, out) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 9);
  int valid = 0, invalid = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    if (fields[9] == "invalid")
      ++invalid;
    else
      ++valid;
  }
  CHECK(valid >= 1);
  CHECK(invalid >= 1);
  // a >= L rows are exactly the invalid ones.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    const double a = report::parse_double(fields[0]);
    CHECK((fields[9] == "invalid") == (a >= 1.0));
  }
}

TEST_CASE("process-level exit codes") {
  {
    std::ofstream f("cli_seed.cfg");
    f << kSeedConfig;
  }
  CHECK(run_cli("certify --config cli_seed.cfg") == 0);

  {
    std::ofstream f("cli_big.cfg");
    f << "channel.L = 1.0\nbox.a = 0.8\nbox.b = 0.8\nbox.c = 0.8\n"
         "obstacle.volume = 3.1\nfluid.viscosity = 1.0\n"
         "inflow.type = analytic\ninflow.amplitude = 1.0\n";
  }
  CHECK(run_cli("certify --config cli_big.cfg") == 2);
  CHECK(run_cli("certify --config does_not_exist.cfg") == 1);
  CHECK(run_cli("certify") == 1);          // missing required --config
  CHECK(run_cli("unknown-subcommand") != 0);

  {
    std::ofstream f("cli_badkey.cfg");
    f << "nonsense.key = 3\n";
  }
  CHECK(run_cli("certify --config cli_badkey.cfg") == 1);

  // forces on a non-cubic geometry is an input error.
  {
    std::ofstream f("cli_noncubic.cfg");
    f << "channel.L = 1.0\nbox.a = 0.8\nbox.b = 0.8\nbox.c = 0.7\n"
         "obstacle.volume = 2.0\nfluid.viscosity = 1.0\n"
         "inflow.type = analytic\ninflow.amplitude = 1e-8\n";
  }
  CHECK(run_cli("forces --config cli_noncubic.cfg") == 1);

  // --out writes the same JSON that lands on stdout.
  CHECK(run_cli("certify --config cli_seed.cfg --out cli_out.json") == 0);
  std::ifstream out_file("cli_out.json");
  REQUIRE(out_file.good());
  std::stringstream file_buf;
  file_buf << out_file.rdbuf();
  std::ifstream captured("cli_stdout.txt");
  std::stringstream cap_buf;
  cap_buf << captured.rdbuf();
  CHECK(file_buf.str() == cap_buf.str());

  for (const char* f : {"cli_seed.cfg", "cli_big.cfg", "cli_badkey.cfg",
                        "cli_noncubic.cfg", "cli_out.json", "cli_stdout.txt",
                        "cli_stderr.txt"})
    std::remove(f);
}
