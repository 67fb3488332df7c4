#include "rotwave/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rotwave/kernels.hpp"

namespace rotwave {

double first_energy(const Grid1D& g, std::span<const double> vpot,
                    std::span<const double> u, std::span<const double> v) {
  require_on_grid(g, u);
  require_on_grid(g, v);
  const double l2v = norm_sq(g, v);
  const double gradv = grad_norm_sq(g, v);
  const double gradu = grad_norm_sq(g, u);
  const double wpot = g.h * kern::dot3(vpot, u, u);
  return 0.5 * (l2v + gradv + gradu + wpot);
}

double second_energy(const Grid1D& g, std::span<const double> u,
                     std::span<const double> v) {
  require_on_grid(g, u);
  require_on_grid(g, v);
  const double gradv = grad_norm_sq(g, v);
  Field lap(u.size());
  neg_laplacian(g, u, lap);
  const double lapu = norm_sq(g, lap);
  neg_laplacian(g, v, lap);
  const double lapv = norm_sq(g, lap);
  return 0.5 * (gradv + lapv + lapu);
}

double initial_second_data_energy(const Grid1D& g, const Field& u0,
                                  const Field& u1) {
  require_on_grid(g, u0);
  require_on_grid(g, u1);
  Field l1 = neg_laplacian(g, u1);
  Field l0 = neg_laplacian(g, u0);
  const double lap_u1 = norm_sq(g, l1);
  const double gradlap_u1 = grad_norm_sq(g, l1);
  const double gradlap_u0 = grad_norm_sq(g, l0);
  return 0.5 * (lap_u1 + gradlap_u1 + gradlap_u0);
}

EnergyRecord make_energy_record(const SemidiscreteSystem& sys, double t,
                                std::span<const double> u,
                                std::span<const double> v) {
  const Grid1D& g = sys.grid();
  require_on_grid(g, u);
  require_on_grid(g, v);
  EnergyRecord r;
  r.t = t;
  r.l2u = norm_sq(g, u);
  r.l2v = norm_sq(g, v);
  r.gradu = grad_norm_sq(g, u);
  r.gradv = grad_norm_sq(g, v);
  Field lap(u.size());
  neg_laplacian(g, u, lap);
  r.lapu = norm_sq(g, lap);
  neg_laplacian(g, v, lap);
  r.lapv = norm_sq(g, lap);
  r.wpot = g.h * kern::dot3(sys.vpot(), u, u);
  r.wgradpot = weighted_grad_sq(g, u, sys.vpot_edges());
  r.E = 0.5 * (r.l2v + r.gradv + r.gradu + r.wpot);
  r.Estar = 0.5 * (r.gradv + r.lapv + r.lapu);
  return r;
}

double energy_balance_residual(const TraceSeries& trace) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("energy_balance_residual: empty trace");
  }
  const double e0 = trace.meta.e0;
  const double scale = std::max(e0, 1e-300);
  double worst = 0.0;
  for (const TraceSample& s : trace.samples) {
    const double r = std::abs(s.rec.E + s.acc[acc_us] - e0) / scale;
    worst = std::max(worst, r);
  }
  return worst;
}

Field antiderivative_source(const Grid1D& g, const Field& u0, const Field& u1) {
  require_on_grid(g, u0);
  require_on_grid(g, u1);
  Field src = neg_laplacian(g, u1);
  for (std::size_t i = 0; i < src.size(); ++i) src[i] += u0[i] + u1[i];
  return src;
}

double antiderivative_residual_at(const SemidiscreteSystem& sys,
                                  std::span<const double> u,
                                  std::span<const double> v,
                                  std::span<const double> w,
                                  const Field& source) {
  const Grid1D& g = sys.grid();
  require_on_grid(g, u);
  require_on_grid(g, v);
  require_on_grid(g, w);
  Field lap_v(v.size()), lap_w(w.size());
  neg_laplacian(g, v, lap_v);
  neg_laplacian(g, w, lap_w);
  const Field& vp = sys.vpot();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r =
        v[i] + lap_v[i] + lap_w[i] + vp[i] * w[i] + u[i] - source[i];
    num = std::max(num, std::abs(r));
    den = std::max(den, std::abs(source[i]));
  }
  return num / std::max(den, 1e-300);
}

double antiderivative_residual(const TraceSeries& trace) {
  if (!trace.meta.antider_enabled) {
    throw std::invalid_argument(
        "antiderivative_residual: run did not carry the w accumulator");
  }
  if (trace.samples.empty()) {
    throw std::invalid_argument("antiderivative_residual: empty trace");
  }
  double worst = 0.0;
  for (const TraceSample& s : trace.samples) {
    worst = std::max(worst, s.antider_residual);
  }
  return worst;
}

}  // namespace rotwave
