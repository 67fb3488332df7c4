#pragma once

#include <string>
#include <vector>

#include "rotwave/config.hpp"
#include "rotwave/simulate.hpp"

namespace rotwave {

/// Discretization quality gate: Richardson orders from E(T) under h- and
/// dt-halving, plus the relative E(T) change when the domain is doubled at
/// fixed spacing.
struct ConvergenceResult {
  double e_spatial[3] = {0, 0, 0};   ///< E(T) at h, h/2, h/4 (fixed dt)
  double e_temporal[3] = {0, 0, 0};  ///< E(T) at dt, dt/2, dt/4 (fixed h)
  double e_domain[2] = {0, 0};       ///< E(T) at L and 2L (fixed h, dt)
  double spatial_order = 0.0;
  double temporal_order = 0.0;
  bool temporal_roundoff_floor = false;  ///< refinement hit roundoff, order unmeasurable
  double domain_change = 0.0;            ///< |E_2L - E_L| / max(E_L, tiny)
  bool spatial_ok = false;   ///< order in [1.8, 2.2]
  bool temporal_ok = false;  ///< order in [3.5, 4.5] or roundoff floor
  bool domain_ok = false;    ///< change <= 1e-4
  bool ok = false;
  std::string to_text() const;
};

ConvergenceResult run_convergence(const SimulationInput& base);

/// One row of the parameter sweep.  status: ok (simulated and verified),
/// rejected (failed the admissibility gate), baseline (potential-free
/// reference, inequality machinery skipped), blowup.
struct SweepRow {
  std::string family;
  double v0 = 0.0;
  double alpha = 0.0;
  std::string status;
  double e_T = 0.0;
  double slope = 0.0;
  bool has_e = false;
  bool has_slope = false;
  int pass_count = -1;  ///< inequalities passed out of 15; -1 when skipped
};

/// Cross product of sweep.V0 x sweep.alpha in listed order (falling back to
/// the run's own potential when a list is absent), baseline last.  Row order
/// is deterministic.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

/// "family,V0,alpha,status,E_T,slope,pass_count"; unavailable cells empty.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace rotwave
