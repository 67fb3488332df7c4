#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifdef __unix__
#include <sys/wait.h>
#endif

// ROTWAVE_CLI_PATH is injected by the build as the full path to the binary.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "cli_capture.txt";
  const std::string cmd =
      std::string(ROTWAVE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CliResult r;
#ifdef __unix__
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
  r.exit_code = raw;
#endif
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

const char* kAdmissible =
    "domain.L = 12\n"
    "domain.n = 63\n"
    "time.dt = 0.05\n"
    "time.T = 1\n"
    "potential.family = algebraic\n"
    "potential.V0 = 0.5\n"
    "potential.alpha = 1\n"
    "data.family = zero\n";

}  // namespace

TEST_CASE("validate accepts an admissible potential") {
  write_file("cli_ok.cfg", kAdmissible);
  const CliResult r = run_cli("validate --config cli_ok.cfg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("admissible     : yes") != std::string::npos);
  std::remove("cli_ok.cfg");
}

TEST_CASE("validate rejects an oversized potential with exit code 2") {
  write_file("cli_big.cfg",
             "domain.L = 12\ndomain.n = 63\ntime.dt = 0.05\ntime.T = 1\n"
             "potential.family = algebraic\npotential.V0 = 2\n"
             "potential.alpha = 1\ndata.family = zero\n");
  const CliResult r = run_cli("validate --config cli_big.cfg");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("admissible     : no") != std::string::npos);
  std::remove("cli_big.cfg");
}

TEST_CASE("validate rejects the gaussian family") {
  write_file("cli_gauss.cfg",
             "domain.L = 12\ndomain.n = 63\ntime.dt = 0.05\ntime.T = 1\n"
             "potential.family = gaussian\npotential.V0 = 0.5\n"
             "potential.alpha = 1\ndata.family = zero\n");
  const CliResult r = run_cli("validate --config cli_gauss.cfg");
  CHECK(r.exit_code == 2);
  std::remove("cli_gauss.cfg");
}

TEST_CASE("config errors exit with code 1 and name the line") {
  write_file("cli_bad.cfg", std::string(kAdmissible) + "typo.key = 1\n");
  const CliResult r = run_cli("validate --config cli_bad.cfg");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("typo.key") != std::string::npos);
  std::remove("cli_bad.cfg");
}

TEST_CASE("a missing config file exits with the io code") {
  const CliResult r = run_cli("validate --config does_not_exist.cfg");
  CHECK(r.exit_code == 5);
}

TEST_CASE("missing subcommand or flag is a usage error") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("simulate").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("simulate on zero data passes and writes an all-zero energy column") {
  write_file("cli_zero.cfg",
             std::string(kAdmissible) + "output.csv_path = cli_zero.csv\n" +
                 "output.svg_path = cli_zero.svg\n" +
                 "output.report_path = cli_zero_report.txt\n");
  const CliResult r = run_cli("simulate --config cli_zero.cfg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[all pass]") != std::string::npos);
  CHECK(r.output.find("fit skipped") != std::string::npos);

  std::ifstream csv("cli_zero.csv");
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);  // header
  int rows = 0;
  while (std::getline(csv, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    CHECK(line.substr(c1 + 1, c2 - c1 - 1) == "0");  // E column
    ++rows;
  }
  CHECK(rows == 21);

  std::ifstream svg("cli_zero.svg");
  CHECK(svg.good());
  std::ifstream rep("cli_zero_report.txt");
  REQUIRE(rep.good());
  std::stringstream ss;
  ss << rep.rdbuf();
  CHECK(ss.str().find("T1.1-E") != std::string::npos);

  std::remove("cli_zero.cfg");
  std::remove("cli_zero.csv");
  std::remove("cli_zero.svg");
  std::remove("cli_zero_report.txt");
}

TEST_CASE("simulate can attach the operator check battery") {
  write_file("cli_appx.cfg", kAdmissible);
  const CliResult r = run_cli("simulate --config cli_appx.cfg --with-appendix-checks");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("operator checks  [ok]") != std::string::npos);
  std::remove("cli_appx.cfg");
}

TEST_CASE("fit prints the fitted slope") {
  write_file("cli_fit.cfg",
             "domain.L = 20\ndomain.n = 199\ntime.dt = 0.05\ntime.T = 30\n"
             "time.sample_every = 4\n"
             "potential.family = algebraic\npotential.V0 = 0.5\n"
             "potential.alpha = 1\n"
             "data.family = bump\ndata.radius = 4\n");
  const CliResult r = run_cli("fit --config cli_fit.cfg --tmin 5 --tmax 30");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("slope ") != std::string::npos);
  CHECK(r.output.find("window [5, 30]") != std::string::npos);
  std::remove("cli_fit.cfg");
}

TEST_CASE("sweep reports per-row status and writes its csv") {
  write_file("cli_sweep.cfg",
             "domain.L = 12\ndomain.n = 63\ntime.dt = 0.05\ntime.T = 2\n"
             "potential.family = algebraic\npotential.V0 = 0.5\n"
             "potential.alpha = 1\ndata.family = bump\ndata.radius = 3\n"
             "sweep.V0 = 0.25, 2.0\n"
             "sweep.baseline = true\n"
             "output.csv_path = cli_sweep.csv\n");
  const CliResult r = run_cli("sweep --config cli_sweep.cfg");
  CHECK(r.exit_code == 0);
  std::ifstream csv("cli_sweep.csv");
  REQUIRE(csv.good());
  std::stringstream ss;
  ss << csv.rdbuf();
  const std::string text = ss.str();
  CHECK(text.rfind("family,V0,alpha,status,E_T,slope,pass_count", 0) == 0);
  CHECK(text.find(",ok,") != std::string::npos);        // admissible row ran
  CHECK(text.find(",rejected,") != std::string::npos);  // V0 = 2 fails the gate
  CHECK(text.find(",baseline,") != std::string::npos);  // appended last
  std::remove("cli_sweep.cfg");
  std::remove("cli_sweep.csv");
}

TEST_CASE("blowup exits with code 4") {
  write_file("cli_blow.cfg",
             "domain.L = 4\ndomain.n = 15\ntime.dt = 10\ntime.T = 10000\n"
             "potential.family = algebraic\npotential.V0 = 0.5\n"
             "potential.alpha = 1\ndata.family = bump\ndata.radius = 2\n");
  const CliResult r = run_cli("simulate --config cli_blow.cfg");
  CHECK(r.exit_code == 4);
  std::remove("cli_blow.cfg");
}
