#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "rotwave/config.hpp"
#include "rotwave/csvio.hpp"
#include "rotwave/errors.hpp"
#include "rotwave/fit.hpp"
#include "rotwave/simulate.hpp"
#include "rotwave/trace.hpp"

using namespace rotwave;

namespace {

const char* kFullConfig =
    "# canonical bump run\n"
    "domain.L = 80\n"
    "domain.n = 3199\n"
    "domain.bc = dirichlet\n"
    "\n"
    "time.dt = 2e-3\n"
    "time.T = 50\n"
    "time.sample_every = 25\n"
    "\n"
    "potential.family = algebraic\n"
    "potential.V0 = 0.5\n"
    "potential.alpha = 1\n"
    "\n"
    "data.family = bump   # compactly supported\n"
    "data.amplitude = 1\n"
    "data.radius = 5\n"
    "data.u1 = zero\n"
    "\n"
    "flags.antiderivative_check = true\n"
    "output.csv_path = out.csv\n";

TraceSeries synthetic_power_trace(double slope, double T, double dt) {
  // E(t) = (1+t)^slope exactly; only t and E matter for the fit
  TraceSeries tr;
  for (double t = 0.0; t <= T + 1e-12; t += dt) {
    TraceSample s{};
    s.rec.t = t;
    s.rec.E = std::pow(1.0 + t, slope);
    tr.samples.push_back(s);
  }
  tr.meta.e0 = 1.0;
  return tr;
}

}  // namespace

TEST_CASE("full config round-trips every field") {
  const RunConfig c = parse_config_text(kFullConfig);
  CHECK(c.L == 80.0);
  CHECK(c.n == 3199);
  CHECK(c.bc == Bc::dirichlet);
  CHECK(c.dt == 2e-3);
  CHECK(c.T == 50.0);
  CHECK(c.sample_every == 25);
  CHECK(c.potential.family == PotentialFamily::algebraic);
  CHECK(c.potential.v0 == 0.5);
  CHECK(c.potential.alpha == 1.0);
  CHECK(c.data.family == DataFamily::bump);
  CHECK(c.data.amplitude == 1.0);
  CHECK(c.data.radius == 5.0);
  CHECK(c.data.u1 == U1Family::zero);
  CHECK(c.antiderivative_check);
  CHECK(c.csv_path == "out.csv");
  CHECK(c.svg_path.empty());
  CHECK(c.report_path.empty());
}

TEST_CASE("omitted keys fall back to documented defaults") {
  const RunConfig c = parse_config_text(
      "domain.L = 10\ndomain.n = 99\ntime.dt = 0.01\ntime.T = 1\n"
      "potential.family = constant\npotential.V0 = 0.25\npotential.alpha = 0\n"
      "data.family = gaussian\n");
  CHECK(c.bc == Bc::dirichlet);
  CHECK(c.sample_every == 1);
  CHECK(c.data.amplitude == 1.0);
  CHECK(c.data.radius == 5.0);
  CHECK(c.data.sigma == 1.0);
  CHECK(c.data.k == 0.0);
  CHECK(c.data.u1 == U1Family::zero);
  CHECK_FALSE(c.antiderivative_check);
  CHECK(c.sweep.v0.empty());
  CHECK_FALSE(c.sweep.baseline);
}

TEST_CASE("sweep lists are parsed as comma-separated values") {
  const RunConfig c = parse_config_text(
      "domain.L = 10\ndomain.n = 99\ntime.dt = 0.01\ntime.T = 1\n"
      "potential.family = algebraic\npotential.V0 = 0.5\npotential.alpha = 1\n"
      "data.family = bump\n"
      "sweep.V0 = 0.25, 0.5, 1.0\n"
      "sweep.alpha = 0.5,1\n"
      "sweep.baseline = true\n");
  REQUIRE(c.sweep.v0.size() == 3);
  CHECK(c.sweep.v0[1] == 0.5);
  REQUIRE(c.sweep.alpha.size() == 2);
  CHECK(c.sweep.alpha[0] == 0.5);
  CHECK(c.sweep.baseline);
}

TEST_CASE("unknown keys are rejected with their line number") {
  try {
    parse_config_text(
        "domain.L = 10\ndomain.n = 99\ntime.dt = 0.01\ntime.T = 1\n"
        "potential.family = constant\npotential.V0 = 0.25\n"
        "potential.alpha = 0\ndata.family = zero\n"
        "potental.V1 = 3\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 9);
    CHECK(std::string(e.what()).find("potental.V1") != std::string::npos);
  }
}

TEST_CASE("duplicate keys are rejected") {
  CHECK_THROWS_AS(parse_config_text(
                      "domain.L = 10\ndomain.L = 11\ndomain.n = 99\n"
                      "time.dt = 0.01\ntime.T = 1\npotential.family = constant\n"
                      "potential.V0 = 0.25\npotential.alpha = 0\n"
                      "data.family = zero\n"),
                  ConfigError);
}

TEST_CASE("missing required keys are rejected") {
  CHECK_THROWS_AS(parse_config_text("domain.L = 10\n"), ConfigError);
}

TEST_CASE("malformed values are rejected") {
  const std::string base =
      "domain.n = 99\ntime.dt = 0.01\ntime.T = 1\n"
      "potential.family = constant\npotential.V0 = 0.25\n"
      "potential.alpha = 0\ndata.family = zero\n";
  CHECK_THROWS_AS(parse_config_text("domain.L = ten\n" + base), ConfigError);
  CHECK_THROWS_AS(parse_config_text("domain.L = 10\n" + base +
                                    "flags.antiderivative_check = maybe\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("domain.L = 10\n" + base +
                                    "domain.bc = open\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("domain.L\n" + base), ConfigError);
}

TEST_CASE("post-parse invariants carry the key's line number") {
  try {
    parse_config_text(
        "domain.L = 10\ndomain.n = 99\ntime.dt = -0.01\ntime.T = 1\n"
        "potential.family = constant\npotential.V0 = 0.25\n"
        "potential.alpha = 0\ndata.family = zero\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_config_text(
                      "domain.L = 10\ndomain.n = 2\ntime.dt = 0.01\n"
                      "time.T = 1\npotential.family = constant\n"
                      "potential.V0 = 0.25\npotential.alpha = 0\n"
                      "data.family = zero\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text(
                      "domain.L = 10\ndomain.n = 99\ntime.dt = 0.01\n"
                      "time.T = 1\ntime.sample_every = 0\n"
                      "potential.family = constant\npotential.V0 = 0.25\n"
                      "potential.alpha = 0\ndata.family = zero\n"),
                  ConfigError);
}

TEST_CASE("missing config files raise an io error") {
  CHECK_THROWS_AS(load_config("/nonexistent/rotwave.cfg"), IoError);
}

TEST_CASE("fit recovers a pure power law exactly") {
  const TraceSeries tr = synthetic_power_trace(-2.0, 40.0, 0.25);
  const DecayFit f = fit_decay(tr, 10.0, 40.0);
  CHECK(f.slope == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(f.rms <= 1e-12);
  CHECK(f.count >= 100);
  CHECK(f.t_min == 10.0);
  CHECK(f.t_max == 40.0);
  // E = (1+t)^slope has zero intercept in log-log form
  CHECK(std::abs(f.intercept) <= 1e-12);
}

TEST_CASE("fit of a constant energy has slope zero") {
  const TraceSeries tr = synthetic_power_trace(0.0, 30.0, 0.5);
  const DecayFit f = fit_decay(tr, 5.0, 30.0);
  CHECK(f.slope == doctest::Approx(0.0));
  CHECK(f.rms <= 1e-13);
}

TEST_CASE("fit input validation") {
  const TraceSeries tr = synthetic_power_trace(-2.0, 5.0, 1.0);
  // fewer than 10 samples in the window
  CHECK_THROWS_AS(fit_decay(tr, 0.0, 3.0), std::invalid_argument);
  // empty window
  CHECK_THROWS_AS(fit_decay(tr, 4.0, 2.0), std::invalid_argument);
  // nonpositive energy inside the window
  TraceSeries dead = synthetic_power_trace(-2.0, 30.0, 0.5);
  dead.samples[20].rec.E = 0.0;
  CHECK_THROWS_AS(fit_decay(dead, 0.0, 30.0), std::invalid_argument);
  TraceSeries empty;
  CHECK_THROWS_AS(fit_decay(empty, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("default fit window tracks the boundary potential") {
  TraceSeries tr = synthetic_power_trace(-2.0, 200.0, 1.0);
  tr.meta.T = 200.0;
  tr.meta.L = 80.0;
  // algebraic 0.5/(1+x^2)^(1/2): V(80) = 0.5/sqrt(6401)
  const PotentialSpec spec{PotentialFamily::algebraic, 0.5, 1.0};
  const auto [lo, hi] = default_fit_window(tr, spec);
  CHECK(lo == 10.0);
  const double vL = 0.5 / std::sqrt(1.0 + 80.0 * 80.0);
  CHECK(hi == doctest::Approx(std::min(200.0, 0.2 / vL)));

  // a potential-free boundary keeps the whole run usable
  tr.meta.T = 50.0;
  const auto [lo0, hi0] =
      default_fit_window(tr, PotentialSpec{PotentialFamily::constant, 0.0, 0.0});
  CHECK(lo0 == 10.0);
  CHECK(hi0 == 50.0);
}

TEST_CASE("trace csv has the fixed column set and is byte deterministic") {
  SimulationInput in;
  in.L = 8.0;
  in.n = 63;
  in.bc = Bc::dirichlet;
  in.dt = 0.05;
  in.T = 1.0;
  in.potential = PotentialSpec{PotentialFamily::algebraic, 0.5, 1.0};
  in.data.family = DataFamily::bump;
  in.data.radius = 3.0;
  const std::string a = trace_to_csv(run_simulation(in));
  const std::string b = trace_to_csv(run_simulation(in));
  CHECK(a == b);

  const std::string header = a.substr(0, a.find('\n'));
  CHECK(header ==
        "t,E,Estar,l2u,l2v,gradu,gradv,lapu,lapv,wpot,"
        "acc_us,acc_grad_us,acc_lap_us,acc_u,acc_grad_u,acc_wpot_u,acc_lap_u,"
        "acc_Estar,acc_w_us,acc_w_grad_us,acc_w_grad_u,acc_w_wpot_u,"
        "e_balance_residual");
  // every row carries exactly 23 fields
  std::size_t pos = a.find('\n') + 1;
  int rows = 0;
  while (pos < a.size()) {
    const std::size_t end = a.find('\n', pos);
    const std::string row = a.substr(pos, end - pos);
    CHECK(std::count(row.begin(), row.end(), ',') == 22);
    pos = end + 1;
    ++rows;
  }
  CHECK(rows == 21);  // t = 0 plus 20 steps sampled every step
}

TEST_CASE("file io round trip") {
  const std::string path = "rotwave_test_io.txt";
  write_text_file(path, "alpha\nbeta\n");
  CHECK(read_text_file(path) == "alpha\nbeta\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file(path), IoError);
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x/y.txt", "z"), IoError);
}
