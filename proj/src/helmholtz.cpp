#include "rotwave/helmholtz.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rotwave {

HelmholtzSolver::HelmholtzSolver(const Grid1D& grid)
    : n_(grid.n), bc_(grid.bc) {
  if (n_ < 1) throw std::invalid_argument("helmholtz: empty grid");
  if (bc_ == Bc::periodic && n_ < 3)
    throw std::invalid_argument("helmholtz: periodic factorization needs n >= 3");
  const double ih2 = 1.0 / (grid.h * grid.h);
  off_ = -ih2;
  diag_ = 1.0 + 2.0 * ih2;
  if (bc_ == Bc::dirichlet)
    factor_dirichlet();
  else
    factor_periodic();
  min_pivot_ = *std::min_element(piv_.begin(), piv_.end());
}

void HelmholtzSolver::factor_dirichlet() {
  piv_.resize(n_);
  mul_.assign(n_, 0.0);
  piv_[0] = diag_;
  for (int i = 1; i < n_; ++i) {
    mul_[i] = off_ / piv_[i - 1];
    piv_[i] = diag_ - mul_[i] * off_;
  }
}

void HelmholtzSolver::factor_periodic() {
  // Remove the wrap-around corners: A = T + u v^T with
  //   u = (gamma, 0, ..., 0, off),  v = (1, 0, ..., 0, off/gamma),
  // and T tridiagonal with first/last diagonal entries adjusted to
  //   d0 = diag - gamma,  d_{n-1} = diag - off^2/gamma.
  // gamma = -diag keeps both adjusted entries well away from zero.
  gamma_ = -diag_;
  const double d_first = diag_ - gamma_;
  const double d_last = diag_ - off_ * off_ / gamma_;

  piv_.resize(n_);
  mul_.assign(n_, 0.0);
  piv_[0] = d_first;
  for (int i = 1; i < n_; ++i) {
    mul_[i] = off_ / piv_[i - 1];
    const double d = i == n_ - 1 ? d_last : diag_;
    piv_[i] = d - mul_[i] * off_;
  }

  Field u(n_, 0.0);
  u[0] = gamma_;
  u[n_ - 1] = off_;
  z_.resize(n_);
  thomas(u, z_);
  denom_ = 1.0 + z_[0] + (off_ / gamma_) * z_[n_ - 1];
}

void HelmholtzSolver::thomas(std::span<const double> b, std::span<double> x) const {
  x[0] = b[0];
  for (int i = 1; i < n_; ++i) x[i] = b[i] - mul_[i] * x[i - 1];
  x[n_ - 1] /= piv_[n_ - 1];
  for (int i = n_ - 2; i >= 0; --i) x[i] = (x[i] - off_ * x[i + 1]) / piv_[i];
}

void HelmholtzSolver::solve(std::span<const double> b, std::span<double> x) const {
  assert(b.size() == static_cast<std::size_t>(n_) && x.size() == b.size());
  thomas(b, x);
  if (bc_ == Bc::periodic) {
    const double fac = (x[0] + (off_ / gamma_) * x[n_ - 1]) / denom_;
    for (int i = 0; i < n_; ++i) x[i] -= fac * z_[i];
  }
}

Field HelmholtzSolver::solve(const Field& b) const {
  Field x(b.size());
  solve(b, x);
  return x;
}

}  // namespace rotwave
