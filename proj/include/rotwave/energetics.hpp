#pragma once

#include <span>

#include "rotwave/evolution.hpp"
#include "rotwave/grid.hpp"
#include "rotwave/trace.hpp"

// Energy functionals of the damped wave system and the two global residual
// diagnostics: the energy-balance defect of
//
//   E(t) + int_0^t ||u_s||^2 ds = E(0),  2E = ||u_t||^2 + ||grad u_t||^2
//                                             + ||grad u||^2 + ||sqrt(V) u||^2
//
// and the antiderivative identity satisfied by w(t) = int_0^t u ds:
//
//   (I + L_h) w_tt + L_h w + V.w + w_t = u0 + u1 + L_h u1,
//
// which is a linear invariant of the extended ODE system and therefore holds
// to roundoff under any Runge-Kutta discretization.

namespace rotwave {

/// E = (l2v + gradv + gradu + wpot)/2 with nodal potential weights.
double first_energy(const Grid1D& g, std::span<const double> vpot,
                    std::span<const double> u, std::span<const double> v);

/// E* = (gradv + lapv + lapu)/2.
double second_energy(const Grid1D& g, std::span<const double> u,
                     std::span<const double> v);

/// Half of ||L_h u1||^2 + ||grad L_h u1||^2 + ||grad L_h u0||^2, the
/// higher-order data energy seeding the second-energy bounds.  The gradient
/// of a Laplacian field is taken in the same edge-difference form as every
/// other gradient norm.
double initial_second_data_energy(const Grid1D& g, const Field& u0,
                                  const Field& u1);

/// Snapshot of every squared norm at (t, u, v).  The stored E and Estar are
/// assembled left-to-right from the stored summands, so 2E and 2E* recompose
/// bitwise.
EnergyRecord make_energy_record(const SemidiscreteSystem& sys, double t,
                                std::span<const double> u,
                                std::span<const double> v);

/// max over samples of |E(t) + acc[int ||u_s||^2](t) - E(0)| / max(E(0), tiny).
/// Throws std::invalid_argument on an empty trace.
double energy_balance_residual(const TraceSeries& trace);

/// u0 + u1 + L_h u1 — constant source of the accumulated w-system.
Field antiderivative_source(const Grid1D& g, const Field& u0, const Field& u1);

/// Node-wise max of (I+L_h)v + L_h w + V.w + u - source, scaled by the
/// node-wise max of the source.
double antiderivative_residual_at(const SemidiscreteSystem& sys,
                                  std::span<const double> u,
                                  std::span<const double> v,
                                  std::span<const double> w,
                                  const Field& source);

/// Max of the per-sample scaled residuals recorded along the trace.  Throws
/// std::invalid_argument when the run did not carry the w accumulator.
double antiderivative_residual(const TraceSeries& trace);

}  // namespace rotwave
