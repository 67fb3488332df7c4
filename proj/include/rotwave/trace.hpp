#pragma once

#include <array>
#include <string>
#include <vector>

#include "rotwave/grid.hpp"

namespace rotwave {

/// Indices of the running time integrals carried inside the integrator
/// state.  The order matches the acc_* columns of the trace CSV.
enum AccIndex : int {
  acc_us = 0,        // int ||u_t||^2
  acc_grad_us,       // int ||grad u_t||^2
  acc_lap_us,        // int ||lap u_t||^2
  acc_u,             // int ||u||^2
  acc_grad_u,        // int ||grad u||^2
  acc_wpot_u,        // int ||sqrt(V) u||^2
  acc_lap_u,         // int ||lap u||^2
  acc_Estar,         // int E*
  acc_w_us,          // int (1+s)||u_t||^2
  acc_w_grad_us,     // int (1+s)||grad u_t||^2
  acc_w_grad_u,      // int (1+s)||grad u||^2
  acc_w_wpot_u,      // int (1+s)||sqrt(V) u||^2
  num_acc
};

/// Pointwise energies of one snapshot.  All norm fields are squared norms;
/// 2E = l2v + gradv + gradu + wpot and 2Estar = gradv + lapv + lapu hold
/// bitwise for the stored summation order.
struct EnergyRecord {
  double t = 0.0;
  double E = 0.0;
  double Estar = 0.0;
  double l2u = 0.0;
  double l2v = 0.0;
  double gradu = 0.0;
  double gradv = 0.0;
  double lapu = 0.0;
  double lapv = 0.0;
  double wpot = 0.0;      // ||sqrt(V) u||^2, nodal V
  double wgradpot = 0.0;  // int V |grad u|^2, midpoint-sampled V on edges
};

struct TraceSample {
  EnergyRecord rec;
  std::array<double, num_acc> acc{};
  double e_balance_residual = 0.0;  ///< (E + acc_us - E(0)) / max(E(0), tiny), signed
  double antider_residual = 0.0;    ///< scaled residual of the accumulated w-system
};

struct RunMetadata {
  double L = 0.0;
  int n = 0;
  Bc bc = Bc::dirichlet;
  double h = 0.0;
  double dt = 0.0;
  double T = 0.0;
  int sample_every = 1;
  std::string potential_desc;
  std::string data_desc;
  double v_at_boundary = 0.0;  ///< V(L), sets the trustworthy fitting horizon
  double e0 = 0.0;             ///< E at t = 0
  bool antider_enabled = false;
  std::vector<std::string> warnings;
};

struct TraceSeries {
  std::vector<TraceSample> samples;
  RunMetadata meta;
};

}  // namespace rotwave
