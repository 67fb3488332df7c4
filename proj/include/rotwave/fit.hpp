#pragma once

#include <utility>

#include "rotwave/potential.hpp"
#include "rotwave/trace.hpp"

namespace rotwave {

/// Least-squares line through (log(1+t), log E(t)) over a time window: the
/// fitted slope is the measured algebraic decay rate of the energy.
struct DecayFit {
  double t_min = 0.0;
  double t_max = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;  ///< root mean square of the log-space residuals
  int count = 0;     ///< samples in the window
};

/// Fits over samples with t in [t_min, t_max].  Throws std::invalid_argument
/// when the window holds fewer than 10 samples or E is not strictly positive
/// throughout it.
DecayFit fit_decay(const TraceSeries& trace, double t_min, double t_max);

/// Default window [10, min(T, 0.2/V(L))]: past the initial transient, but
/// well before the boundary-truncation spectral gap (of size about V(L))
/// turns the decay exponential.  May come back empty (first >= second) for
/// short runs; callers must check.
std::pair<double, double> default_fit_window(const TraceSeries& trace,
                                             const PotentialSpec& spec);

}  // namespace rotwave
