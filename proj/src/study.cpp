#include "rotwave/study.hpp"

#include <cmath>
#include <cstdio>

#include "rotwave/errors.hpp"
#include "rotwave/fit.hpp"
#include "rotwave/ledger.hpp"

namespace rotwave {

namespace {

double final_energy(const SimulationInput& in) {
  const TraceSeries trace = run_simulation(in);
  return trace.samples.back().rec.E;
}

// node count that halves h on the same interval
int refine_nodes(int n, Bc bc) {
  return bc == Bc::dirichlet ? 2 * n + 1 : 2 * n;
}

}  // namespace

ConvergenceResult run_convergence(const SimulationInput& base) {
  ConvergenceResult r;

  // sampling the endpoints is enough for E(T)
  SimulationInput in = base;
  in.sample_every = 1 << 20;
  in.with_w = false;

  {
    SimulationInput s = in;
    for (int level = 0; level < 3; ++level) {
      r.e_spatial[level] = final_energy(s);
      s.n = refine_nodes(s.n, s.bc);
    }
    const double d01 = std::abs(r.e_spatial[0] - r.e_spatial[1]);
    const double d12 = std::abs(r.e_spatial[1] - r.e_spatial[2]);
    r.spatial_order = (d12 > 0.0) ? std::log2(d01 / d12) : 0.0;
  }

  {
    SimulationInput s = in;
    for (int level = 0; level < 3; ++level) {
      r.e_temporal[level] = final_energy(s);
      s.dt *= 0.5;
    }
    const double d01 = std::abs(r.e_temporal[0] - r.e_temporal[1]);
    const double d12 = std::abs(r.e_temporal[1] - r.e_temporal[2]);
    const double floor = 1e-13 * std::max(std::abs(r.e_temporal[2]), 1e-300);
    if (d12 <= floor) {
      r.temporal_roundoff_floor = true;
      r.temporal_order = 0.0;
    } else {
      r.temporal_order = std::log2(d01 / d12);
    }
  }

  {
    SimulationInput s = in;
    r.e_domain[0] = final_energy(s);
    s.L *= 2.0;
    s.n = refine_nodes(s.n, s.bc);  // same node count change keeps h fixed
    r.e_domain[1] = final_energy(s);
    r.domain_change = std::abs(r.e_domain[1] - r.e_domain[0]) /
                      std::max(std::abs(r.e_domain[0]), 1e-300);
  }

  r.spatial_ok = r.spatial_order >= 1.8 && r.spatial_order <= 2.2;
  r.temporal_ok =
      r.temporal_roundoff_floor ||
      (r.temporal_order >= 3.5 && r.temporal_order <= 4.5);
  r.domain_ok = r.domain_change <= 1e-4;
  r.ok = r.spatial_ok && r.temporal_ok && r.domain_ok;
  return r;
}

std::string ConvergenceResult::to_text() const {
  char buf[900];
  std::snprintf(
      buf, sizeof buf,
      "convergence study  %s\n"
      "  spatial  E(T): %.17g  %.17g  %.17g\n"
      "           order %.3f  [1.8, 2.2]  %s\n"
      "  temporal E(T): %.17g  %.17g  %.17g\n"
      "           order %.3f  [3.5, 4.5]%s  %s\n"
      "  domain   E(T): %.17g  ->  %.17g\n"
      "           relative change %.3e  (<= 1e-4)  %s\n",
      ok ? "[ok]" : "[FAILED]", e_spatial[0], e_spatial[1], e_spatial[2],
      spatial_order, spatial_ok ? "ok" : "FAIL", e_temporal[0], e_temporal[1],
      e_temporal[2], temporal_order,
      temporal_roundoff_floor ? "  (roundoff floor)" : "",
      temporal_ok ? "ok" : "FAIL", e_domain[0], e_domain[1], domain_change,
      domain_ok ? "ok" : "FAIL");
  return buf;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  std::vector<double> v0s =
      cfg.sweep.v0.empty() ? std::vector<double>{cfg.potential.v0}
                           : cfg.sweep.v0;
  std::vector<double> alphas =
      cfg.sweep.alpha.empty() ? std::vector<double>{cfg.potential.alpha}
                              : cfg.sweep.alpha;

  std::vector<SweepRow> rows;
  const Grid1D grid = build_grid(cfg.L, cfg.n, cfg.bc);

  auto run_row = [&](const PotentialSpec& spec, bool is_baseline) {
    SweepRow row;
    row.family = is_baseline ? "none" : family_name(spec.family);
    row.v0 = spec.v0;
    row.alpha = spec.alpha;

    if (!is_baseline) {
      const ValidationResult vr = validate_V1(spec, grid);
      if (!vr.ok) {
        row.status = "rejected";
        return row;
      }
    }

    SimulationInput in = to_simulation_input(cfg);
    in.potential = spec;
    in.with_w = false;
    try {
      const TraceSeries trace = run_simulation(in);
      row.e_T = trace.samples.back().rec.E;
      row.has_e = true;
      row.status = is_baseline ? "baseline" : "ok";
      if (!is_baseline) {
        const Field u0 = sample_u0(in.data, grid);
        const Field u1 = sample_u1(in.data, grid);
        const ConstantLedger led = compute_constants(grid, spec, u0, u1);
        const VerificationReport rep = verify_inequalities(trace, led);
        row.pass_count = 0;
        for (const VerificationEntry& e : rep.entries) {
          if (e.pass) ++row.pass_count;
        }
      }
      const auto [fa, fb] = default_fit_window(trace, spec);
      try {
        row.slope = fit_decay(trace, fa, fb).slope;
        row.has_slope = true;
      } catch (const std::invalid_argument&) {
        // window too small or energy not positive; leave the cell empty
      }
    } catch (const BlowupError&) {
      row.status = "blowup";
    }
    return row;
  };

  for (double v0 : v0s) {
    for (double alpha : alphas) {
      PotentialSpec spec = cfg.potential;
      spec.v0 = v0;
      spec.alpha = alpha;
      rows.push_back(run_row(spec, false));
    }
  }
  if (cfg.sweep.baseline) {
    PotentialSpec zero;
    zero.family = PotentialFamily::constant;
    zero.v0 = 0.0;
    zero.alpha = 0.0;
    rows.push_back(run_row(zero, true));
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "family,V0,alpha,status,E_T,slope,pass_count\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%s,", r.family.c_str(),
                  r.v0, r.alpha, r.status.c_str());
    out += buf;
    if (r.has_e) {
      std::snprintf(buf, sizeof buf, "%.17g", r.e_T);
      out += buf;
    }
    out += ',';
    if (r.has_slope) {
      std::snprintf(buf, sizeof buf, "%.17g", r.slope);
      out += buf;
    }
    out += ',';
    if (r.pass_count >= 0) {
      std::snprintf(buf, sizeof buf, "%d", r.pass_count);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rotwave
