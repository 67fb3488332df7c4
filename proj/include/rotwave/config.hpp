#pragma once

#include <string>
#include <vector>

#include "rotwave/evolution.hpp"
#include "rotwave/grid.hpp"
#include "rotwave/potential.hpp"

// Flat `section.key = value` run configuration.  `#` starts a comment,
// blank lines are ignored, keys may appear once.  Unknown keys are hard
// errors with the offending line number: a misspelled physics parameter must
// never silently fall back to a default.

namespace rotwave {

struct SweepSpec {
  std::vector<double> v0;     ///< sweep.V0, comma separated
  std::vector<double> alpha;  ///< sweep.alpha, comma separated
  bool baseline = false;      ///< append a potential-free reference row
};

struct RunConfig {
  // domain
  double L = 0.0;
  int n = 0;
  Bc bc = Bc::dirichlet;
  // time
  double dt = 0.0;
  double T = 0.0;
  int sample_every = 1;
  // physics
  PotentialSpec potential;
  DataSpec data;
  // flags
  bool antiderivative_check = false;
  // outputs (empty = skip)
  std::string csv_path;
  std::string svg_path;
  std::string report_path;
  // sweep lists (cmd_sweep only)
  SweepSpec sweep;
};

/// Parses config text; throws ConfigError with a line number on malformed
/// lines, unknown keys, duplicates, bad values, missing required keys, or
/// violated invariants (dt > 0, T > 0, sample_every >= 1, n >= 3, L > 0).
RunConfig parse_config_text(const std::string& text);

/// Reads the file and parses it; throws IoError when unreadable.
RunConfig load_config(const std::string& path);

}  // namespace rotwave
