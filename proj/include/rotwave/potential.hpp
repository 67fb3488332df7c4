#pragma once

#include <string>

#include "rotwave/grid.hpp"

// Potential families and the admissibility gate.  A potential enters the
// decay machinery only if it is strictly positive, its logarithmic slope
// |V'|/V stays below the declared alpha, and alpha^2*||V||_inf < 1.  The
// shipped families:
//
//   algebraic  V(x) = V0*(1+x^2)^(-alpha/2)  — admissible for alpha^2*V0 < 1
//   constant   V(x) = V0                     — flat; slope condition trivial
//   gaussian   V(x) = V0*exp(-x^2)           — deliberately inadmissible test
//                                              family (|V'|/V = 2|x| grows
//                                              without bound)
//
// Sup-norms of V, V', V'' are taken from closed-form maximization of the
// family, not from grid sampling, so downstream constants do not depend on
// resolution.  The slope ratio alpha_eff is reported as the nodal supremum.

namespace rotwave {

enum class PotentialFamily { algebraic, constant, gaussian };

struct PotentialSpec {
  PotentialFamily family = PotentialFamily::algebraic;
  double v0 = 0.0;     ///< amplitude, V(0)
  double alpha = 0.0;  ///< declared slope constant in |V'| <= alpha*V
};

struct PotentialEval {
  double v = 0.0;
  double vp = 0.0;
  double vpp = 0.0;
};

/// V, V', V'' at one point, from the family's closed forms.
PotentialEval eval_potential(const PotentialSpec& spec, double x);

/// Closed-form sup-norms over the whole line.
double potential_sup(const PotentialSpec& spec);        // ||V||_inf
double potential_slope_sup(const PotentialSpec& spec);  // ||V'||_inf
double potential_curv_sup(const PotentialSpec& spec);   // ||V''||_inf

struct ValidationResult {
  bool ok = false;
  bool positive = false;     ///< V > 0 at every node
  double alpha_eff = 0.0;    ///< nodal sup of |V'|/V
  double vinf = 0.0;
  double v1inf = 0.0;
  double v2inf = 0.0;
  double smallness = 0.0;    ///< alpha^2 * ||V||_inf, must be < 1
  std::string to_text() const;
};

/// Checks positivity, the slope condition alpha_eff <= alpha, and the
/// smallness condition alpha^2*||V||_inf < 1 on the given grid.
ValidationResult validate_V1(const PotentialSpec& spec, const Grid1D& grid);

/// V sampled at the grid nodes.
Field sample_potential(const PotentialSpec& spec, const Grid1D& grid);

/// V sampled at edge midpoints (weights for the weighted gradient energy).
Field sample_potential_edges(const PotentialSpec& spec, const Grid1D& grid);

/// || (u0 + u1 + L_h u1) / sqrt(V) ||_h — the weighted data norm entering
/// the decay constants.  Throws ValidationError if V effectively vanishes
/// at some node (nodal minimum below 1e-300).
double weighted_data_norm(const Grid1D& grid, const PotentialSpec& spec,
                          const Field& u0, const Field& u1);

const char* family_name(PotentialFamily f);

}  // namespace rotwave
