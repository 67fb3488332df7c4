// Command-line front end: validate | simulate | fit | converge | sweep.
// Exit codes: 0 success, 1 configuration or usage error, 2 potential fails
// the admissibility gate, 3 a verified bound or quality gate failed,
// 4 simulation blow-up, 5 I/O failure.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rotwave/appendix.hpp"
#include "rotwave/config.hpp"
#include "rotwave/csvio.hpp"
#include "rotwave/energetics.hpp"
#include "rotwave/errors.hpp"
#include "rotwave/fit.hpp"
#include "rotwave/ledger.hpp"
#include "rotwave/report.hpp"
#include "rotwave/simulate.hpp"
#include "rotwave/study.hpp"
#include "rotwave/svg.hpp"

namespace {

using namespace rotwave;

int cmd_validate(const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  const Grid1D grid = build_grid(cfg.L, cfg.n, cfg.bc);
  const ValidationResult vr = validate_V1(cfg.potential, grid);
  std::fputs(vr.to_text().c_str(), stdout);
  return vr.ok ? 0 : 2;
}

int cmd_simulate(const std::string& config_path, bool with_appendix) {
  const RunConfig cfg = load_config(config_path);
  const Grid1D grid = build_grid(cfg.L, cfg.n, cfg.bc);
  const ValidationResult vr = validate_V1(cfg.potential, grid);
  if (!vr.ok) {
    std::fputs(vr.to_text().c_str(), stdout);
    return 2;
  }

  const TraceSeries trace = run_simulation(to_simulation_input(cfg));

  const Field u0 = sample_u0(cfg.data, grid);
  const Field u1 = sample_u1(cfg.data, grid);
  const ConstantLedger ledger = compute_constants(grid, cfg.potential, u0, u1);
  const VerificationReport ver = verify_inequalities(trace, ledger);

  std::optional<DecayFit> fit;
  std::string fit_note;
  const auto [fa, fb] = default_fit_window(trace, cfg.potential);
  if (fa < fb) {
    try {
      fit = fit_decay(trace, fa, fb);
    } catch (const std::invalid_argument& e) {
      fit_note = std::string("fit skipped: ") + e.what();
    }
  } else {
    fit_note = "fit skipped: default window is empty (run too short)";
  }

  std::optional<AppendixSummary> appendix;
  if (with_appendix) {
    // operator checks run at desk scale: a 128-node copy of the configured
    // system (same bc, potential, half-width)
    const Grid1D small = build_grid(cfg.L, 128, cfg.bc);
    const SemidiscreteSystem sys = assemble_system(small, cfg.potential);
    appendix = run_appendix_checks(sys, 100);
  }

  const std::string report =
      assemble_report(trace.meta, ledger, ver, fit, fit_note, appendix);
  std::fputs(report.c_str(), stdout);

  if (!cfg.csv_path.empty()) write_text_file(cfg.csv_path, trace_to_csv(trace));
  if (!cfg.svg_path.empty()) {
    write_text_file(cfg.svg_path,
                    render_decay_svg(trace, fit, ledger.final_energy_bound));
  }
  if (!cfg.report_path.empty()) write_text_file(cfg.report_path, report);

  if (appendix && !appendix->ok) return 3;
  return ver.all_pass() ? 0 : 3;
}

int cmd_fit(const std::string& config_path, std::optional<double> tmin,
            std::optional<double> tmax) {
  const RunConfig cfg = load_config(config_path);
  const TraceSeries trace = run_simulation(to_simulation_input(cfg));
  auto [fa, fb] = default_fit_window(trace, cfg.potential);
  if (tmin) fa = *tmin;
  if (tmax) fb = *tmax;
  const DecayFit fit = fit_decay(trace, fa, fb);
  std::printf(
      "window [%.17g, %.17g]  samples %d\nslope %.17g\nintercept %.17g\n"
      "rms %.17g\n",
      fit.t_min, fit.t_max, fit.count, fit.slope, fit.intercept, fit.rms);
  return 0;
}

int cmd_converge(const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  const ConvergenceResult res = run_convergence(to_simulation_input(cfg));
  std::fputs(res.to_text().c_str(), stdout);
  return res.ok ? 0 : 3;
}

int cmd_sweep(const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  const std::vector<SweepRow> rows = run_sweep(cfg);
  const std::string csv = sweep_to_csv(rows);
  std::fputs(csv.c_str(), stdout);
  if (!cfg.csv_path.empty()) write_text_file(cfg.csv_path, csv);
  return 0;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const BlowupError& e) {
    std::fprintf(stderr, "blow-up: %s\n", e.what());
    return 4;
  } catch (const IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 5;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numerical laboratory for the damped wave equation with rotational "
      "inertia: u_tt - u_ttxx - u_xx + V(x) u + u_t = 0"};
  app.require_subcommand(1);

  std::string config;
  bool with_appendix = false;
  double tmin_v = 0.0, tmax_v = 0.0;

  CLI::App* validate =
      app.add_subcommand("validate", "check the potential admissibility gate");
  validate->add_option("--config", config, "run configuration file")
      ->required();

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run, verify every decay bound, write csv/svg/report");
  simulate->add_option("--config", config, "run configuration file")
      ->required();
  simulate->add_flag("--with-appendix-checks", with_appendix,
                     "append operator-structure checks (desk-scale grid)");

  CLI::App* fit =
      app.add_subcommand("fit", "run and fit the log-log energy decay slope");
  fit->add_option("--config", config, "run configuration file")->required();
  CLI::Option* tmin_opt =
      fit->add_option("--tmin", tmin_v, "fit window start (default 10)");
  CLI::Option* tmax_opt = fit->add_option(
      "--tmax", tmax_v, "fit window end (default min(T, 0.2/V(L)))");

  CLI::App* converge = app.add_subcommand(
      "converge", "orders under h- and dt-refinement, domain doubling");
  converge->add_option("--config", config, "run configuration file")
      ->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "run the V0 x alpha grid plus baseline");
  sweep->add_option("--config", config, "run configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (validate->parsed()) {
    return guarded([&] { return cmd_validate(config); });
  }
  if (simulate->parsed()) {
    return guarded([&] { return cmd_simulate(config, with_appendix); });
  }
  if (fit->parsed()) {
    std::optional<double> tmin, tmax;
    if (tmin_opt->count()) tmin = tmin_v;
    if (tmax_opt->count()) tmax = tmax_v;
    return guarded([&] { return cmd_fit(config, tmin, tmax); });
  }
  if (converge->parsed()) {
    return guarded([&] { return cmd_converge(config); });
  }
  if (sweep->parsed()) {
    return guarded([&] { return cmd_sweep(config); });
  }
  return 1;
}
