#include "rotwave/appendix.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

namespace rotwave {

namespace {

// Dense symmetric positive definite solve (Cholesky), for the phase-space
// metric G = h(I + L_h^2) at the small sizes the norm estimate uses.
class DenseSpd {
 public:
  explicit DenseSpd(std::vector<double> a, int n) : n_(n), a_(std::move(a)) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < j; ++k) {
        const double ljk = a_[j * n_ + k];
        for (int i = j; i < n_; ++i) a_[i * n_ + j] -= a_[i * n_ + k] * ljk;
      }
      const double d = a_[j * n_ + j];
      if (!(d > 0.0)) throw std::runtime_error("metric not positive definite");
      const double inv = 1.0 / std::sqrt(d);
      for (int i = j; i < n_; ++i) a_[i * n_ + j] *= inv;
    }
  }

  void solve(std::vector<double>& x) const {
    for (int i = 0; i < n_; ++i) {
      double s = x[i];
      for (int k = 0; k < i; ++k) s -= a_[i * n_ + k] * x[k];
      x[i] = s / a_[i * n_ + i];
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = x[i];
      for (int k = i + 1; k < n_; ++k) s -= a_[k * n_ + i] * x[k];
      x[i] = s / a_[i * n_ + i];
    }
  }

 private:
  int n_;
  std::vector<double> a_;  // lower triangle holds L
};

// z = h (y + L_h L_h y), the metric applied to one component field
Field apply_metric(const Grid1D& g, const Field& y) {
  Field t = neg_laplacian(g, y);
  Field z = neg_laplacian(g, t);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = g.h * (y[i] + z[i]);
  return z;
}

Field random_field(const Grid1D& g, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Field f(static_cast<std::size_t>(g.n));
  for (double& x : f) x = dist(rng);
  return f;
}

double linf_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double linf(const Field& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double h2_inner(const Grid1D& g, const Field& a, const Field& b) {
  Field la = neg_laplacian(g, a);
  Field lb = neg_laplacian(g, b);
  return inner(g, a, b) + inner(g, la, lb);
}

double phase_inner(const Grid1D& g, const PhaseVector& a,
                   const PhaseVector& b) {
  return h2_inner(g, a.u, b.u) + h2_inner(g, a.v, b.v);
}

double phase_norm_sq(const Grid1D& g, const PhaseVector& a) {
  return phase_inner(g, a, a);
}

PhaseVector apply_A(const Grid1D& g, const PhaseVector& pv) {
  require_on_grid(g, pv.u);
  require_on_grid(g, pv.v);
  PhaseVector out;
  out.u = pv.v;
  out.v.resize(pv.u.size());
  for (std::size_t i = 0; i < pv.u.size(); ++i) out.v[i] = -pv.u[i];
  return out;
}

PhaseVector apply_LV(const SemidiscreteSystem& sys, const PhaseVector& pv) {
  const Grid1D& g = sys.grid();
  require_on_grid(g, pv.u);
  Field vu(pv.u.size());
  for (std::size_t i = 0; i < vu.size(); ++i) vu[i] = sys.vpot()[i] * pv.u[i];
  PhaseVector out;
  out.u.assign(pv.u.size(), 0.0);
  out.v = sys.mass().solve(vu);
  return out;
}

PhaseVector apply_LV_F(const SemidiscreteSystem& sys, const PhaseVector& pv) {
  const Grid1D& g = sys.grid();
  require_on_grid(g, pv.u);
  require_on_grid(g, pv.v);
  const std::size_t n = pv.u.size();
  Field diff(n), vu(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = pv.u[i] - pv.v[i];
    vu[i] = sys.vpot()[i] * pv.u[i];
  }
  Field jd = sys.mass().solve(diff);
  Field jvu = sys.mass().solve(vu);
  PhaseVector out;
  out.u.assign(n, 0.0);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.v[i] = jd[i] - jvu[i];
  return out;
}

PhaseVector solve_identity_minus_A(const Grid1D& g, const PhaseVector& G) {
  require_on_grid(g, G.u);
  require_on_grid(g, G.v);
  const std::size_t n = G.u.size();
  PhaseVector out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.u[i] = 0.5 * (G.u[i] + G.v[i]);
    out.v[i] = 0.5 * (G.v[i] - G.u[i]);
  }
  return out;
}

double estimate_LV_norm(const SemidiscreteSystem& sys, int iters) {
  const Grid1D& g = sys.grid();
  const int n = g.n;

  // dense metric G = h(I + L_h^2), column by column
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  Field e(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    Field col = apply_metric(g, e);
    for (int i = 0; i < n; ++i) dense[static_cast<std::size_t>(i) * n + j] = col[i];
    e[j] = 0.0;
  }
  DenseSpd chol(std::move(dense), n);

  // Power iteration on G^-1 B^T G B with B = J_h diag(V); the dominant
  // eigenvalue is the squared operator norm of L_V in the metric.  J_h and G
  // are symmetric, so B^T = diag(V) J_h.
  std::mt19937 rng(777u);
  Field x = random_field(g, rng);
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Field vu(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) vu[i] = sys.vpot()[i] * x[i];
    Field bx = sys.mass().solve(vu);  // B x
    Field gb = apply_metric(g, bx);   // G B x
    Field gx = apply_metric(g, x);
    double numer = 0.0, denom = 0.0;  // ||B x||_G^2 / ||x||_G^2
    for (std::size_t i = 0; i < x.size(); ++i) {
      numer += bx[i] * gb[i];
      denom += x[i] * gx[i];
    }
    lambda = numer / denom;
    Field y = sys.mass().solve(gb);  // J_h G B x
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= sys.vpot()[i];
    chol.solve(y);  // next iterate G^-1 B^T G B x
    double nrm = 0.0;
    for (double v : y) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / nrm;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

std::string AppendixSummary::to_text() const {
  char buf[512];
  std::string out = "operator checks";
  out += ok ? "  [ok]\n" : "  [FAILED]\n";
  std::snprintf(buf, sizeof buf,
                "  trials                 %d\n"
                "  skew defect            %.3e   (<= 1e-12)\n"
                "  yosida identity        %.3e   (<= 1e-12)\n"
                "  yosida contraction     %.3e   (<= 1e-12)\n"
                "  resolvent residual     %.3e   (<= 1e-13)\n"
                "  rhs agreement          %.3e   (<= 1e-12)\n"
                "  |L_V| estimate         %.6g   (<= %.6g)\n",
                trials, skew_defect, yosida_identity, yosida_contraction,
                resolvent_residual, rhs_agreement, lv_norm, lv_norm_bound);
  out += buf;
  return out;
}

AppendixSummary run_appendix_checks(const SemidiscreteSystem& sys, int trials,
                                    unsigned seed) {
  const Grid1D& g = sys.grid();
  std::mt19937 rng(seed);
  AppendixSummary s;
  s.trials = trials;

  for (int t = 0; t < trials; ++t) {
    PhaseVector U{random_field(g, rng), random_field(g, rng)};
    const double nsq = phase_norm_sq(g, U);

    PhaseVector AU = apply_A(g, U);
    s.skew_defect =
        std::max(s.skew_defect, std::abs(phase_inner(g, AU, U)) / nsq);

    Field w = random_field(g, rng);
    Field jw = sys.mass().solve(w);
    Field ljw = neg_laplacian(g, jw);
    Field expect(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) expect[i] = w[i] - jw[i];
    s.yosida_identity =
        std::max(s.yosida_identity, linf_diff(ljw, expect) / linf(w));
    const double wn = std::sqrt(norm_sq(g, w));
    const double jn = std::sqrt(norm_sq(g, jw));
    s.yosida_contraction =
        std::max(s.yosida_contraction, std::max(jn - wn, 0.0) / wn);

    PhaseVector G{random_field(g, rng), random_field(g, rng)};
    PhaseVector X = solve_identity_minus_A(g, G);
    PhaseVector AX = apply_A(g, X);
    PhaseVector R;
    R.u.resize(X.u.size());
    R.v.resize(X.u.size());
    for (std::size_t i = 0; i < X.u.size(); ++i) {
      R.u[i] = X.u[i] - AX.u[i] - G.u[i];
      R.v[i] = X.v[i] - AX.v[i] - G.v[i];
    }
    s.resolvent_residual = std::max(
        s.resolvent_residual,
        std::sqrt(phase_norm_sq(g, R) / std::max(phase_norm_sq(g, G), 1e-300)));

    // three right-hand-side forms on the same state
    Field du_s, dv_s;
    sys.semigroup_rhs(U.u, U.v, du_s, dv_s);

    const std::size_t n = U.u.size();
    Field du_d(n), dv_d(n), l1(n), l2(n), l3(n);
    sys.direct_rhs(U.u, U.v, du_d, dv_d, l1, l2, l3);

    PhaseVector P = apply_LV_F(sys, U);
    Field dv_g(n);
    for (std::size_t i = 0; i < n; ++i) dv_g[i] = AU.v[i] + P.v[i];

    const double scale = std::max({linf(dv_s), linf(U.u), linf(U.v), 1e-300});
    s.rhs_agreement = std::max(
        s.rhs_agreement,
        std::max(linf_diff(dv_s, dv_d), linf_diff(dv_s, dv_g)) / scale);
  }

  s.lv_norm = estimate_LV_norm(sys);
  double vinf_grid = 0.0;
  for (double v : sys.vpot()) vinf_grid = std::max(vinf_grid, v);
  s.lv_norm_bound = 3.0 * (1.0 + vinf_grid);

  s.ok = s.skew_defect <= 1e-12 && s.yosida_identity <= 1e-12 &&
         s.yosida_contraction <= 1e-12 && s.resolvent_residual <= 1e-13 &&
         s.rhs_agreement <= 1e-12 && s.lv_norm <= s.lv_norm_bound;
  return s;
}

}  // namespace rotwave
