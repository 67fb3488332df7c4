#pragma once

#include "rotwave/config.hpp"
#include "rotwave/evolution.hpp"
#include "rotwave/trace.hpp"

namespace rotwave {

/// Everything one run needs; RunConfig maps onto this, and studies build
/// variants of it directly.
struct SimulationInput {
  double L = 0.0;
  int n = 0;
  Bc bc = Bc::dirichlet;
  double dt = 0.0;
  double T = 0.0;
  int sample_every = 1;
  PotentialSpec potential;
  DataSpec data;
  bool with_w = false;  ///< carry the antiderivative field and its residual
};

SimulationInput to_simulation_input(const RunConfig& cfg);

/// Integrates the system to T and records a sample at step 0, every
/// sample_every-th step, and the final step.  The per-sample energy-balance
/// residual is always recorded; the antiderivative residual only when with_w.
/// Emits a metadata warning when a dirichlet domain is too small to keep
/// boundary effects away from compact data (L < radius + T + 10).
/// Throws BlowupError if the state leaves the finite range.
TraceSeries run_simulation(const SimulationInput& in);

}  // namespace rotwave
