#include "rotwave/simulate.hpp"

#include <cmath>
#include <cstdio>

#include "rotwave/energetics.hpp"

namespace rotwave {

SimulationInput to_simulation_input(const RunConfig& cfg) {
  SimulationInput in;
  in.L = cfg.L;
  in.n = cfg.n;
  in.bc = cfg.bc;
  in.dt = cfg.dt;
  in.T = cfg.T;
  in.sample_every = cfg.sample_every;
  in.potential = cfg.potential;
  in.data = cfg.data;
  in.with_w = cfg.antiderivative_check;
  return in;
}

namespace {

std::string describe_potential(const PotentialSpec& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s V0=%.17g alpha=%.17g",
                family_name(p.family), p.v0, p.alpha);
  return buf;
}

std::string describe_data(const DataSpec& d) {
  char buf[192];
  switch (d.family) {
    case DataFamily::bump:
      std::snprintf(buf, sizeof buf, "bump A=%.17g R=%.17g", d.amplitude,
                    d.radius);
      break;
    case DataFamily::gaussian:
      std::snprintf(buf, sizeof buf, "gaussian A=%.17g sigma=%.17g",
                    d.amplitude, d.sigma);
      break;
    case DataFamily::zero:
      std::snprintf(buf, sizeof buf, "zero");
      break;
    case DataFamily::fourier_mode:
      std::snprintf(buf, sizeof buf, "fourier-mode A=%.17g k=%.17g",
                    d.amplitude, d.k);
      break;
  }
  std::string out = buf;
  out += d.u1 == U1Family::zero ? ", u1 zero" : ", u1 gaussian-derivative";
  return out;
}

}  // namespace

TraceSeries run_simulation(const SimulationInput& in) {
  const Grid1D grid = build_grid(in.L, in.n, in.bc);
  const SemidiscreteSystem sys = assemble_system(grid, in.potential);
  const Field u0 = sample_u0(in.data, grid);
  const Field u1 = sample_u1(in.data, grid);

  TraceSeries trace;
  RunMetadata& meta = trace.meta;
  meta.L = in.L;
  meta.n = in.n;
  meta.bc = in.bc;
  meta.h = grid.h;
  meta.dt = in.dt;
  meta.T = in.T;
  meta.sample_every = in.sample_every;
  meta.potential_desc = describe_potential(in.potential);
  meta.data_desc = describe_data(in.data);
  meta.v_at_boundary = eval_potential(in.potential, in.L).v;
  meta.antider_enabled = in.with_w;

  const double radius = data_radius(in.data);
  if (in.bc == Bc::dirichlet && std::isfinite(radius) &&
      in.L < radius + in.T + 10.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "domain margin: L=%g is below data radius + T + 10 = %g; "
                  "boundary effects may reach the data",
                  in.L, radius + in.T + 10.0);
    meta.warnings.push_back(buf);
  }

  const long steps = std::llround(in.T / in.dt);
  if (steps < 1 || std::abs(static_cast<double>(steps) * in.dt - in.T) >
                       1e-9 * std::max(in.T, 1.0)) {
    meta.warnings.push_back("T is not an integer multiple of dt; "
                            "running to the nearest step count");
  }

  WaveSimulator sim(sys, u0, u1, in.with_w);
  const Field source =
      in.with_w ? antiderivative_source(grid, u0, u1) : Field{};

  auto record = [&](double t) {
    TraceSample s;
    s.rec = make_energy_record(sys, t, sim.u(), sim.v());
    const std::span<const double> acc = sim.acc();
    for (int i = 0; i < num_acc; ++i) s.acc[i] = acc[i];
    s.e_balance_residual =
        (s.rec.E + s.acc[acc_us] - meta.e0) / std::max(meta.e0, 1e-300);
    if (in.with_w) {
      s.antider_residual =
          antiderivative_residual_at(sys, sim.u(), sim.v(), sim.w(), source);
    }
    trace.samples.push_back(std::move(s));
  };

  meta.e0 = first_energy(grid, sys.vpot(), u0, u1);
  record(0.0);
  for (long k = 1; k <= steps; ++k) {
    sim.step(in.dt);
    if (k % in.sample_every == 0 || k == steps) {
      record(sim.time());
    }
  }
  return trace;
}

}  // namespace rotwave
