#include "rotwave/potential.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rotwave/errors.hpp"
#include "rotwave/kernels.hpp"

namespace rotwave {

PotentialEval eval_potential(const PotentialSpec& spec, double x) {
  PotentialEval e;
  switch (spec.family) {
    case PotentialFamily::constant:
      e.v = spec.v0;
      break;
    case PotentialFamily::algebraic: {
      // V = V0*(1+x^2)^(-a/2); V' and V'' from differentiating the power law.
      const double a = spec.alpha;
      const double q = 1.0 + x * x;
      e.v = spec.v0 * std::pow(q, -0.5 * a);
      e.vp = -spec.v0 * a * x * std::pow(q, -0.5 * (a + 2.0));
      e.vpp = -spec.v0 * a * (1.0 - (a + 1.0) * x * x) * std::pow(q, -0.5 * (a + 4.0));
      break;
    }
    case PotentialFamily::gaussian: {
      const double g = spec.v0 * std::exp(-x * x);
      e.v = g;
      e.vp = -2.0 * x * g;
      e.vpp = (4.0 * x * x - 2.0) * g;
      break;
    }
  }
  return e;
}

double potential_sup(const PotentialSpec& spec) { return spec.v0; }

double potential_slope_sup(const PotentialSpec& spec) {
  const double a = spec.alpha;
  switch (spec.family) {
    case PotentialFamily::constant:
      return 0.0;
    case PotentialFamily::algebraic:
      // |V'| peaks at x = 1/sqrt(a+1).
      return spec.v0 * a / std::sqrt(a + 1.0) *
             std::pow((a + 1.0) / (a + 2.0), 0.5 * (a + 2.0));
    case PotentialFamily::gaussian:
      // |2x e^{-x^2}| peaks at x = 1/sqrt(2).
      return spec.v0 * std::sqrt(2.0) * std::exp(-0.5);
  }
  return 0.0;
}

double potential_curv_sup(const PotentialSpec& spec) {
  switch (spec.family) {
    case PotentialFamily::constant:
      return 0.0;
    case PotentialFamily::algebraic:
      // |V''| is largest at the origin for every alpha > 0: the only other
      // critical value, 2*((a+1)/(a+4))^{(a+4)/2} * V0 * a, stays below V0*a.
      return spec.v0 * spec.alpha;
    case PotentialFamily::gaussian:
      return 2.0 * spec.v0;
  }
  return 0.0;
}

std::string ValidationResult::to_text() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "positive       : %s\n"
                "alpha_eff      : %.12g\n"
                "sup|V|         : %.12g\n"
                "sup|V'|        : %.12g\n"
                "sup|V''|       : %.12g\n"
                "alpha^2*sup|V| : %.12g  (must be < 1)\n"
                "admissible     : %s\n",
                positive ? "yes" : "no", alpha_eff, vinf, v1inf, v2inf, smallness,
                ok ? "yes" : "no");
  return buf;
}

ValidationResult validate_V1(const PotentialSpec& spec, const Grid1D& grid) {
  ValidationResult r;
  r.vinf = potential_sup(spec);
  r.v1inf = potential_slope_sup(spec);
  r.v2inf = potential_curv_sup(spec);
  r.smallness = spec.alpha * spec.alpha * r.vinf;
  r.positive = true;
  r.alpha_eff = 0.0;
  for (double x : grid.nodes) {
    const PotentialEval e = eval_potential(spec, x);
    if (!(e.v > 0.0)) {
      r.positive = false;
      continue;
    }
    r.alpha_eff = std::max(r.alpha_eff, std::abs(e.vp) / e.v);
  }
  r.ok = r.positive && r.alpha_eff <= spec.alpha && r.smallness < 1.0;
  return r;
}

Field sample_potential(const PotentialSpec& spec, const Grid1D& grid) {
  Field v(grid.n);
  for (int i = 0; i < grid.n; ++i) v[i] = eval_potential(spec, grid.nodes[i]).v;
  return v;
}

Field sample_potential_edges(const PotentialSpec& spec, const Grid1D& grid) {
  const std::vector<double> mid = edge_midpoints(grid);
  Field v(mid.size());
  for (std::size_t e = 0; e < mid.size(); ++e) v[e] = eval_potential(spec, mid[e]).v;
  return v;
}

double weighted_data_norm(const Grid1D& grid, const PotentialSpec& spec,
                          const Field& u0, const Field& u1) {
  require_on_grid(grid, u0);
  require_on_grid(grid, u1);
  Field g = neg_laplacian(grid, u1);  // -lap(u1) realizes the -Delta u1 term
  for (int i = 0; i < grid.n; ++i) {
    const double v = eval_potential(spec, grid.nodes[i]).v;
    if (!(v >= 1e-300))
      throw ValidationError("weighted data norm: potential vanishes at x = " +
                            std::to_string(grid.nodes[i]));
    g[i] = (u0[i] + u1[i] + g[i]) / std::sqrt(v);
  }
  return std::sqrt(grid.h * kern::dot(g, g));
}

const char* family_name(PotentialFamily f) {
  switch (f) {
    case PotentialFamily::algebraic: return "algebraic";
    case PotentialFamily::constant: return "constant";
    case PotentialFamily::gaussian: return "gaussian";
  }
  return "?";
}

}  // namespace rotwave
