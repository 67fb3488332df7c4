#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rotwave/energetics.hpp"
#include "rotwave/evolution.hpp"
#include "rotwave/grid.hpp"
#include "rotwave/potential.hpp"
#include "rotwave/simulate.hpp"
#include "support.hpp"

using namespace rotwave;

namespace {

SimulationInput small_run(double dt, double T, bool with_w) {
  SimulationInput in;
  in.L = 12.0;
  in.n = 239;
  in.bc = Bc::dirichlet;
  in.dt = dt;
  in.T = T;
  in.sample_every = 1;
  in.potential = PotentialSpec{PotentialFamily::algebraic, 0.5, 1.0};
  in.data.family = DataFamily::bump;
  in.data.amplitude = 1.0;
  in.data.radius = 3.0;
  in.with_w = with_w;
  return in;
}

}  // namespace

TEST_CASE("all energies of the zero state vanish") {
  const Grid1D g = build_grid(4.0, 50, Bc::dirichlet);
  const Field z(g.n, 0.0);
  const Field vpot(g.n, 0.5);
  CHECK(first_energy(g, vpot, z, z) == 0.0);
  CHECK(second_energy(g, z, z) == 0.0);
  CHECK(initial_second_data_energy(g, z, z) == 0.0);
}

TEST_CASE("first energy of a pure mode at rest") {
  // exact-symbol grid: E(0) = (kappa^2 + V0) ||u0||^2 / 2 with ||u0||^2 = L
  const int n = 64, m = 4;
  const double L = n * std::sin(std::numbers::pi * m / n);
  const Grid1D g = build_grid(L, n, Bc::periodic);
  const double k = std::numbers::pi * m / L;
  const double kappa = discrete_symbol(k, g.h);
  const double v0 = 0.25;
  Field u0(g.n), zero(g.n, 0.0), vpot(g.n, v0);
  for (int i = 0; i < g.n; ++i) u0[i] = std::cos(k * g.nodes[i]);
  const double expect = 0.5 * (kappa * kappa + v0) * L;
  CHECK(first_energy(g, vpot, u0, zero) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("second energy of the (0,1,0) field at h=1") {
  const Grid1D g = build_grid(2.0, 3, Bc::dirichlet);
  const Field u = {0.0, 1.0, 0.0};
  const Field zero(3, 0.0);
  // only |lap u|^2 = 6 contributes
  CHECK(second_energy(g, u, zero) == doctest::Approx(3.0));
}

TEST_CASE("higher-order data energy of a sine mode scales like kappa^6") {
  const int n = 64, m = 4;
  const double L = n * std::sin(std::numbers::pi * m / n);
  const Grid1D g = build_grid(L, n, Bc::periodic);
  const double k = std::numbers::pi * m / L;
  Field u0(g.n);
  const Field zero(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) u0[i] = std::sin(k * g.nodes[i]);
  // kappa = 1 on this grid, so E2(0) = ||grad L_h u0||^2/2 = ||u0||^2/2 = L/2
  CHECK(initial_second_data_energy(g, u0, zero) ==
        doctest::Approx(0.5 * L).epsilon(1e-12));
  // swapped into u1 the mode contributes both the kappa^4 and kappa^6 terms:
  // (kappa^4 + kappa^6)/2 * ||mode||^2 = L
  CHECK(initial_second_data_energy(g, zero, u0) ==
        doctest::Approx(L).epsilon(1e-12));
}

TEST_CASE("energy record recomposes its summands bitwise") {
  const Grid1D g = build_grid(8.0, 127, Bc::dirichlet);
  const SemidiscreteSystem sys =
      assemble_system(g, PotentialSpec{PotentialFamily::algebraic, 0.5, 1.0});
  const Field u = testsup::random_field(g.n, 61);
  const Field v = testsup::random_field(g.n, 62);
  const EnergyRecord rec = make_energy_record(sys, 1.25, u, v);
  CHECK(2.0 * rec.E == ((rec.l2v + rec.gradv) + rec.gradu) + rec.wpot);
  CHECK(2.0 * rec.Estar == (rec.gradv + rec.lapv) + rec.lapu);
  CHECK(rec.E == first_energy(g, sys.vpot(), u, v));
  CHECK(rec.Estar == second_energy(g, u, v));
  CHECK(rec.t == 1.25);
  CHECK(rec.wgradpot >= 0.0);
  CHECK(rec.wpot >= 0.0);
}

TEST_CASE("energy is dissipated along a run") {
  const TraceSeries trace = run_simulation(small_run(0.02, 6.0, false));
  REQUIRE(trace.samples.size() > 10);
  CHECK(trace.meta.e0 == trace.samples.front().rec.E);
  double prev = trace.samples.front().rec.E;
  for (const TraceSample& s : trace.samples) {
    CHECK(s.rec.E <= prev * (1.0 + 1e-12) + 1e-15);
    prev = s.rec.E;
  }
  CHECK(trace.samples.back().rec.Estar < trace.samples.front().rec.Estar);
}

TEST_CASE("energy balance residual is small and shrinks at fourth order") {
  const double r1 = energy_balance_residual(run_simulation(small_run(0.1, 5.0, false)));
  const double r2 = energy_balance_residual(run_simulation(small_run(0.05, 5.0, false)));
  CHECK(r1 <= 1e-5);  // measured ~1.1e-6 at this very coarse step
  if (r1 > 1e-12) {  // above the roundoff floor the RK4 order shows
    CHECK(r1 / r2 >= 8.0);
    CHECK(r1 / r2 <= 40.0);
  }
}

TEST_CASE("antiderivative identity holds to roundoff") {
  const TraceSeries trace = run_simulation(small_run(0.02, 6.0, true));
  CHECK(trace.meta.antider_enabled);
  CHECK(antiderivative_residual(trace) <= 1e-11);
}

TEST_CASE("antiderivative residual of the zero state is exactly zero") {
  SimulationInput in = small_run(0.05, 1.0, true);
  in.data.family = DataFamily::zero;
  const TraceSeries trace = run_simulation(in);
  CHECK(antiderivative_residual(trace) == 0.0);
}

TEST_CASE("antiderivative source is assembled from the data") {
  const Grid1D g = build_grid(4.0, 31, Bc::periodic);
  const Field u0 = testsup::random_field(g.n, 63);
  const Field u1 = testsup::random_field(g.n, 64);
  const Field src = antiderivative_source(g, u0, u1);
  const Field lu1 = neg_laplacian(g, u1);
  for (int i = 0; i < g.n; ++i) {
    CHECK(src[i] == doctest::Approx(u0[i] + u1[i] + lu1[i]).epsilon(1e-15));
  }
}

TEST_CASE("residual helpers reject malformed traces") {
  TraceSeries empty;
  CHECK_THROWS_AS(energy_balance_residual(empty), std::invalid_argument);
  const TraceSeries no_w = run_simulation(small_run(0.1, 0.5, false));
  CHECK_THROWS_AS(antiderivative_residual(no_w), std::invalid_argument);
}
