#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rotwave/grid.hpp"
#include "rotwave/helmholtz.hpp"
#include "rotwave/kernels.hpp"
#include "rotwave/potential.hpp"
#include "rotwave/trace.hpp"

// Semidiscrete form of  u_tt - u_ttxx - u_xx + V(x) u + u_t = 0:
//
//   u' = v,   (I + L_h) v' = -L_h u - V.u - v
//
// advanced by classical RK4 on an extended state that also carries the
// running time integrals (their derivatives are the integrands, evaluated at
// the stage states with the same stage weights) and, optionally, the
// antiderivative field w = int_0^t u ds.

namespace rotwave {

class SemidiscreteSystem {
 public:
  SemidiscreteSystem(Grid1D grid, Field vpot_nodes, Field vpot_edges);

  const Grid1D& grid() const { return grid_; }
  const Field& vpot() const { return vpot_; }
  const Field& vpot_edges() const { return vpot_edges_; }
  const HelmholtzSolver& mass() const { return mass_; }

  /// du = v, dv = M^{-1}(-L_h u - V.u - v) with caller-owned scratch of grid
  /// size (contents overwritten).
  void direct_rhs(std::span<const double> u, std::span<const double> v,
                  std::span<double> du, std::span<double> dv,
                  std::span<double> scratch_lap, std::span<double> scratch_vu,
                  std::span<double> scratch_sum) const;

  /// Resolvent form of the same vector field:
  /// du = v, dv = -u + J_h u - J_h(V.u) - J_h v.  Allocates; test/check path.
  void semigroup_rhs(const Field& u, const Field& v, Field& du, Field& dv) const;

 private:
  Grid1D grid_;
  Field vpot_;
  Field vpot_edges_;
  HelmholtzSolver mass_;
};

/// Samples V at nodes and edge midpoints and factors the mass operator.
/// Requires V >= 0 at every node (the admissibility gate is separate and
/// stricter; the potential-free baseline runs through here too).
SemidiscreteSystem assemble_system(const Grid1D& grid, const PotentialSpec& spec);

// ---------------------------------------------------------------------------
// initial data families

enum class DataFamily { bump, gaussian, zero, fourier_mode };
enum class U1Family { zero, gaussian_derivative };

struct DataSpec {
  DataFamily family = DataFamily::bump;
  double amplitude = 1.0;
  double radius = 5.0;  // bump support radius
  double sigma = 1.0;   // gaussian width
  double k = 0.0;       // fourier mode wavenumber
  U1Family u1 = U1Family::zero;
};

Field sample_u0(const DataSpec& d, const Grid1D& g);
Field sample_u1(const DataSpec& d, const Grid1D& g);

/// Effective support radius used by the domain-margin warning; +inf for the
/// fourier-mode family (delocalized, no meaningful margin).
double data_radius(const DataSpec& d);

const char* family_name(DataFamily f);

// ---------------------------------------------------------------------------
// generic fixed-step RK4 over a flat state vector

class Rk4Workspace {
 public:
  void resize(std::size_t m);

  /// One classical RK4 step of y' = rhs(t, y) in place.
  template <class Rhs>
  void step(Rhs&& rhs, double t, double dt, std::span<double> y);

 private:
  std::vector<double> k1_, k2_, k3_, k4_, stage_;
};

// ---------------------------------------------------------------------------
// wave integrator on the extended state [u | v | acc(12) | w?]

class WaveSimulator {
 public:
  WaveSimulator(const SemidiscreteSystem& sys, const Field& u0, const Field& u1,
                bool with_w);

  /// Advances one step; dt must stay the same across calls.  Throws
  /// BlowupError when the state leaves the finite range.
  void step(double dt);

  double time() const { return t_; }
  long step_count() const { return steps_; }

  std::span<const double> u() const;
  std::span<const double> v() const;
  std::span<const double> w() const;  // empty when disabled
  std::span<const double> acc() const;

  const SemidiscreteSystem& system() const { return *sys_; }

 private:
  void rhs(double t, std::span<const double> y, std::span<double> dy);

  const SemidiscreteSystem* sys_;
  bool with_w_;
  std::size_t n_;
  std::vector<double> y_;
  Rk4Workspace wk_;
  Field lap_u_, lap_v_, vu_, sum_;
  double t_ = 0.0;
  double dt_ = 0.0;
  long steps_ = 0;
};

// ---------------------------------------------------------------------------
// closed-form single-mode reference

struct ModeSolution {
  double a = 0.0;
  double adot = 0.0;
};

/// Amplitude of one spatial mode with symbol kappa under constant potential
/// v0: solves (1+kappa^2) a'' + a' + (kappa^2 + v0) a = 0 through the
/// characteristic roots, covering the oscillatory, critically damped, and
/// overdamped cases.
ModeSolution fourier_mode_oracle(double kappa, double v0, double t, double a0,
                                 double a1);

/// Discrete symbol of the stencil: kappa^2 = 4 sin^2(k h/2)/h^2, returned as
/// kappa.
double discrete_symbol(double k, double h);

// template body ------------------------------------------------------------

template <class Rhs>
void Rk4Workspace::step(Rhs&& rhs, double t, double dt, std::span<double> y) {
  rhs(t, std::span<const double>(y), std::span<double>(k1_));
  kern::stage_state(y, 0.5 * dt, k1_, stage_);
  rhs(t + 0.5 * dt, std::span<const double>(stage_), std::span<double>(k2_));
  kern::stage_state(y, 0.5 * dt, k2_, stage_);
  rhs(t + 0.5 * dt, std::span<const double>(stage_), std::span<double>(k3_));
  kern::stage_state(y, dt, k3_, stage_);
  rhs(t + dt, std::span<const double>(stage_), std::span<double>(k4_));
  kern::rk4_combine(y, dt, k1_, k2_, k3_, k4_);
}

}  // namespace rotwave
