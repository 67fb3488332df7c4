#pragma once

#include <span>
#include <vector>

#include "rotwave/grid.hpp"

namespace rotwave {

/**
 * Direct solver for the discrete Helmholtz system (I + L_h) x = b.
 *
 * The matrix is the shifted stencil operator: diagonal 1 + 2/h^2 and
 * off-diagonals -1/h^2, strictly diagonally dominant and symmetric positive
 * definite, so elimination without pivoting is stable and every pivot stays
 * positive.
 *
 * - dirichlet grids: plain tridiagonal (Thomas) factorization.
 * - periodic grids: the wrap-around corner entries are removed with a
 *   rank-one (Sherman-Morrison) correction; each solve costs one extra
 *   back-substituted vector and a scalar divide.
 *
 * The factorization is computed once in the constructor and reused by every
 * solve, which is what the time stepper does at each stage.
 */
class HelmholtzSolver {
 public:
  explicit HelmholtzSolver(const Grid1D& grid);

  /// Solves (I + L_h) x = b.  b and x must have grid size; b == x is allowed.
  void solve(std::span<const double> b, std::span<double> x) const;
  Field solve(const Field& b) const;

  /// Smallest elimination pivot (positive for this matrix family).
  double min_pivot() const { return min_pivot_; }

  int size() const { return n_; }

 private:
  void factor_dirichlet();
  void factor_periodic();
  void thomas(std::span<const double> b, std::span<double> x) const;

  int n_ = 0;
  Bc bc_ = Bc::dirichlet;
  double off_ = 0.0;    // off-diagonal entry -1/h^2
  double diag_ = 0.0;   // unmodified diagonal 1 + 2/h^2
  double min_pivot_ = 0.0;
  std::vector<double> piv_;   // elimination pivots
  std::vector<double> mul_;   // forward-elimination multipliers
  // periodic correction: A = T + u v^T with u = (gamma,0,...,0,off),
  // v = (1,0,...,0,off/gamma); z_ = T^{-1} u, denom_ = 1 + v.z
  std::vector<double> z_;
  double gamma_ = 0.0;
  double denom_ = 1.0;
};

}  // namespace rotwave
