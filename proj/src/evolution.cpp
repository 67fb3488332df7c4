#include "rotwave/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rotwave/errors.hpp"
#include "rotwave/kernels.hpp"

namespace rotwave {

SemidiscreteSystem::SemidiscreteSystem(Grid1D grid, Field vpot_nodes,
                                       Field vpot_edges)
    : grid_(std::move(grid)),
      vpot_(std::move(vpot_nodes)),
      vpot_edges_(std::move(vpot_edges)),
      mass_(grid_) {
  if (vpot_.size() != static_cast<std::size_t>(grid_.n) ||
      vpot_edges_.size() != edge_count(grid_)) {
    throw std::invalid_argument("potential samples do not match the grid");
  }
}

void SemidiscreteSystem::direct_rhs(std::span<const double> u,
                                    std::span<const double> v,
                                    std::span<double> du, std::span<double> dv,
                                    std::span<double> scratch_lap,
                                    std::span<double> scratch_vu,
                                    std::span<double> scratch_sum) const {
  require_on_grid(grid_, u);
  require_on_grid(grid_, v);
  std::copy(v.begin(), v.end(), du.begin());
  neg_laplacian(grid_, u, scratch_lap);
  kern::mul(vpot_, u, scratch_vu);
  kern::neg_add3(scratch_lap, scratch_vu, v, scratch_sum);
  mass_.solve(scratch_sum, dv);
}

void SemidiscreteSystem::semigroup_rhs(const Field& u, const Field& v,
                                       Field& du, Field& dv) const {
  require_on_grid(grid_, u);
  require_on_grid(grid_, v);
  du = v;
  Field ju = mass_.solve(u);
  Field vu(u.size());
  kern::mul(vpot_, u, vu);
  Field jvu = mass_.solve(vu);
  Field jv = mass_.solve(v);
  dv.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    dv[i] = -u[i] + ju[i] - jvu[i] - jv[i];
  }
}

SemidiscreteSystem assemble_system(const Grid1D& grid,
                                   const PotentialSpec& spec) {
  Field vn = sample_potential(spec, grid);
  for (double v : vn) {
    if (!(v >= 0.0)) {
      throw ValidationError("potential is negative on the grid");
    }
  }
  Field ve = sample_potential_edges(spec, grid);
  return SemidiscreteSystem(grid, std::move(vn), std::move(ve));
}

// ---------------------------------------------------------------------------

Field sample_u0(const DataSpec& d, const Grid1D& g) {
  Field f(static_cast<std::size_t>(g.n), 0.0);
  switch (d.family) {
    case DataFamily::bump:
      for (int i = 0; i < g.n; ++i) {
        const double r = g.nodes[i] / d.radius;
        if (std::abs(r) < 1.0) {
          f[i] = d.amplitude * std::exp(-1.0 / (1.0 - r * r));
        }
      }
      break;
    case DataFamily::gaussian:
      for (int i = 0; i < g.n; ++i) {
        const double x = g.nodes[i];
        f[i] = d.amplitude * std::exp(-x * x / (2.0 * d.sigma * d.sigma));
      }
      break;
    case DataFamily::zero:
      break;
    case DataFamily::fourier_mode:
      for (int i = 0; i < g.n; ++i) {
        f[i] = d.amplitude * std::cos(d.k * g.nodes[i]);
      }
      break;
  }
  return f;
}

Field sample_u1(const DataSpec& d, const Grid1D& g) {
  Field f(static_cast<std::size_t>(g.n), 0.0);
  if (d.u1 == U1Family::gaussian_derivative) {
    const double s2 = d.sigma * d.sigma;
    for (int i = 0; i < g.n; ++i) {
      const double x = g.nodes[i];
      f[i] = -d.amplitude * (x / s2) * std::exp(-x * x / (2.0 * s2));
    }
  }
  return f;
}

double data_radius(const DataSpec& d) {
  switch (d.family) {
    case DataFamily::bump:
      return d.radius;
    case DataFamily::gaussian:
      // 8 sigma: the tail mass beyond this is ~1e-14, below every tolerance
      // used by the truncation checks.
      return 8.0 * d.sigma;
    case DataFamily::zero:
      return 0.0;
    case DataFamily::fourier_mode:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

const char* family_name(DataFamily f) {
  switch (f) {
    case DataFamily::bump: return "bump";
    case DataFamily::gaussian: return "gaussian";
    case DataFamily::zero: return "zero";
    case DataFamily::fourier_mode: return "fourier-mode";
  }
  return "?";
}

// ---------------------------------------------------------------------------

void Rk4Workspace::resize(std::size_t m) {
  k1_.assign(m, 0.0);
  k2_.assign(m, 0.0);
  k3_.assign(m, 0.0);
  k4_.assign(m, 0.0);
  stage_.assign(m, 0.0);
}

// ---------------------------------------------------------------------------

WaveSimulator::WaveSimulator(const SemidiscreteSystem& sys, const Field& u0,
                             const Field& u1, bool with_w)
    : sys_(&sys), with_w_(with_w), n_(static_cast<std::size_t>(sys.grid().n)) {
  require_on_grid(sys.grid(), u0);
  require_on_grid(sys.grid(), u1);
  const std::size_t m = 2 * n_ + num_acc + (with_w_ ? n_ : 0);
  y_.assign(m, 0.0);
  std::copy(u0.begin(), u0.end(), y_.begin());
  std::copy(u1.begin(), u1.end(), y_.begin() + n_);
  wk_.resize(m);
  lap_u_.assign(n_, 0.0);
  lap_v_.assign(n_, 0.0);
  vu_.assign(n_, 0.0);
  sum_.assign(n_, 0.0);
}

std::span<const double> WaveSimulator::u() const {
  return {y_.data(), n_};
}
std::span<const double> WaveSimulator::v() const {
  return {y_.data() + n_, n_};
}
std::span<const double> WaveSimulator::acc() const {
  return {y_.data() + 2 * n_, static_cast<std::size_t>(num_acc)};
}
std::span<const double> WaveSimulator::w() const {
  if (!with_w_) return {};
  return {y_.data() + 2 * n_ + num_acc, n_};
}

void WaveSimulator::rhs(double t, std::span<const double> y,
                        std::span<double> dy) {
  const std::span<const double> u = y.subspan(0, n_);
  const std::span<const double> v = y.subspan(n_, n_);
  const std::span<double> du = dy.subspan(0, n_);
  const std::span<double> dv = dy.subspan(n_, n_);

  sys_->direct_rhs(u, v, du, dv, lap_u_, vu_, sum_);

  const Grid1D& g = sys_->grid();
  neg_laplacian(g, v, lap_v_);

  const double l2v = g.h * kern::dot(v, v);
  const double l2u = g.h * kern::dot(u, u);
  const double gv = grad_norm_sq(g, v);
  const double gu = grad_norm_sq(g, u);
  const double lv = g.h * kern::dot(lap_v_, lap_v_);
  const double lu = g.h * kern::dot(lap_u_, lap_u_);
  const double wp = g.h * kern::dot3(sys_->vpot(), u, u);
  const double weight = 1.0 + t;

  double* a = dy.data() + 2 * n_;
  a[acc_us] = l2v;
  a[acc_grad_us] = gv;
  a[acc_lap_us] = lv;
  a[acc_u] = l2u;
  a[acc_grad_u] = gu;
  a[acc_wpot_u] = wp;
  a[acc_lap_u] = lu;
  a[acc_Estar] = 0.5 * (gv + lv + lu);
  a[acc_w_us] = weight * l2v;
  a[acc_w_grad_us] = weight * gv;
  a[acc_w_grad_u] = weight * gu;
  a[acc_w_wpot_u] = weight * wp;

  if (with_w_) {
    const std::span<double> dw = dy.subspan(2 * n_ + num_acc, n_);
    std::copy(u.begin(), u.end(), dw.begin());
  }
}

void WaveSimulator::step(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (dt_ == 0.0) {
    dt_ = dt;
  } else if (dt != dt_) {
    throw std::invalid_argument("dt must stay fixed across steps");
  }
  wk_.step([this](double t, std::span<const double> y,
                  std::span<double> dy) { rhs(t, y, dy); },
           t_, dt_, y_);
  ++steps_;
  t_ = static_cast<double>(steps_) * dt_;

  double acc_total = 0.0;
  for (int i = 0; i < num_acc; ++i) acc_total += y_[2 * n_ + i];
  if (!std::isfinite(acc_total)) {
    throw BlowupError(t_, "state left the finite range");
  }
}

// ---------------------------------------------------------------------------

double discrete_symbol(double k, double h) {
  return 2.0 * std::abs(std::sin(0.5 * k * h)) / h;
}

ModeSolution fourier_mode_oracle(double kappa, double v0, double t, double a0,
                                 double a1) {
  const double m = 1.0 + kappa * kappa;
  const double c = kappa * kappa + v0;
  const double disc = 1.0 - 4.0 * m * c;
  ModeSolution out;
  if (disc < -1e-14) {
    // complex pair sigma +- i omega: damped oscillation
    const double sigma = -1.0 / (2.0 * m);
    const double omega = std::sqrt(-disc) / (2.0 * m);
    const double C = a0;
    const double S = (a1 - sigma * a0) / omega;
    const double e = std::exp(sigma * t);
    const double cs = std::cos(omega * t);
    const double sn = std::sin(omega * t);
    out.a = e * (C * cs + S * sn);
    out.adot = e * ((sigma * C + omega * S) * cs + (sigma * S - omega * C) * sn);
  } else if (disc > 1e-14) {
    // two real roots: overdamped
    const double r = std::sqrt(disc);
    const double l1 = (-1.0 + r) / (2.0 * m);
    const double l2 = (-1.0 - r) / (2.0 * m);
    const double c1 = (a1 - l2 * a0) / (l1 - l2);
    const double c2 = a0 - c1;
    out.a = c1 * std::exp(l1 * t) + c2 * std::exp(l2 * t);
    out.adot = c1 * l1 * std::exp(l1 * t) + c2 * l2 * std::exp(l2 * t);
  } else {
    // double root: critically damped
    const double l = -1.0 / (2.0 * m);
    const double b = a1 - l * a0;
    const double e = std::exp(l * t);
    out.a = (a0 + b * t) * e;
    out.adot = (b + l * (a0 + b * t)) * e;
  }
  return out;
}

}  // namespace rotwave
