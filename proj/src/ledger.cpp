#include "rotwave/ledger.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rotwave/energetics.hpp"
#include "rotwave/errors.hpp"
#include "rotwave/kernels.hpp"

namespace rotwave {

namespace {

void append_row(std::string& out, const char* name, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  %-20s %.17g\n", name, value);
  out += buf;
}

}  // namespace

ConstantLedger compute_constants(const Grid1D& grid, const PotentialSpec& spec,
                                 const Field& u0, const Field& u1) {
  const ValidationResult vr = validate_V1(spec, grid);
  if (!vr.ok) {
    throw ValidationError("potential fails the admissibility conditions:\n" +
                          vr.to_text());
  }

  ConstantLedger c;
  c.alpha = spec.alpha;
  c.vinf = vr.vinf;
  c.v1inf = vr.v1inf;
  c.v2inf = vr.v2inf;

  c.eps = (c.v1inf == 0.0) ? 0.5 : std::min(0.5, 1.0 / (2.0 * c.v1inf));
  c.Ceps = 1.0 / (4.0 * c.eps);
  c.delta = 0.25;
  c.Cdelta = c.v2inf / (4.0 * c.delta);
  const double shrink = 1.0 - c.eps * c.v1inf;  // >= 1/2 by choice of eps

  const double small = c.alpha * c.alpha * c.vinf;
  if (!(small < 1.0)) {
    throw ValidationError("alpha^2*||V||_inf must stay below 1");
  }
  c.Cstar = 1.0 / (1.0 - small);

  // data norms
  const Field vpot = sample_potential(spec, grid);
  const Field vedges = sample_potential_edges(spec, grid);
  const double l2u0 = norm_sq(grid, u0);
  const double gradu0 = grad_norm_sq(grid, u0);
  const double gradu1 = grad_norm_sq(grid, u1);
  Field lap0 = neg_laplacian(grid, u0);
  Field lap1 = neg_laplacian(grid, u1);
  const double lapu0 = norm_sq(grid, lap0);
  const double lapu1 = norm_sq(grid, lap1);
  const double wdn = weighted_data_norm(grid, spec, u0, u1);

  c.e0 = first_energy(grid, vpot, u0, u1);
  c.estar0 = second_energy(grid, u0, u1);
  c.E2zero = initial_second_data_energy(grid, u0, u1);
  c.wgrad0 = weighted_grad_sq(grid, u0, vedges);
  c.wlap0 = grid.h * kern::dot3(vpot, lap0, lap0);

  c.J0sq = 0.5 * (l2u0 + gradu0) + 0.5 * wdn * wdn;
  c.I0sq = inner(grid, u0, u1) + grad_inner(grid, u0, u1) + 0.5 * l2u0;
  c.I1sq = 0.5 * gradu1 + 0.5 * lapu1 + 0.5 * lapu0;
  c.K0sq = c.I1sq + 0.5 * c.wgrad0 + c.Ceps * c.v1inf * c.J0sq;
  c.K2sq = c.K0sq / shrink;
  c.K1sq = c.I0sq + c.e0 + (c.I1sq + c.wgrad0) / shrink +
           c.Ceps * c.v1inf * c.J0sq / shrink;
  c.C1sq = 2.0 * c.e0 + c.vinf * c.J0sq + c.K2sq + c.K1sq;
  c.K3sq = c.e0 + 0.5 * (c.e0 + c.K2sq + c.K1sq + c.vinf * c.J0sq);
  c.J1sq = c.e0 + 0.5 * c.J0sq;
  c.J2sq = c.I1sq + 0.5 * c.wgrad0 + c.Ceps * c.v1inf * c.J0sq;
  c.B0 = grad_inner(grid, u1, u0) - 0.5 * gradu0 + inner(grid, u1, u0);
  c.C0 = grad_inner(grid, u1, u0) + inner(grid, lap1, lap0) + 0.5 * gradu0;
  c.L0sq = c.E2zero + (c.v2inf * c.v2inf / (4.0 * c.delta)) * c.J0sq +
           2.0 * (c.v1inf * c.v1inf / (4.0 * c.delta)) * c.K1sq +
           0.5 * c.wlap0;
  c.L1sq = c.C0 + c.e0 + c.L0sq + c.K2sq + 0.5 * c.vinf * c.vinf * c.J0sq +
           c.I1sq + 0.5 * c.vinf * (c.J0sq + 2.0 * c.L0sq);
  c.E0sq = c.B0 + 3.0 * c.C1sq + c.J1sq + 2.0 * c.estar0 + c.wgrad0 +
           c.vinf * c.K1sq + c.K3sq;
  c.C2sq = c.K2sq + c.L0sq + c.L1sq;
  c.gradweight_bound = 2.0 * c.estar0 + c.wgrad0 + 2.0 * c.C2sq +
                       2.0 * c.vinf * c.K1sq +
                       small * c.Cstar * (c.E0sq + 2.0 * c.C2sq);
  c.final_energy_bound = c.e0 + c.K3sq + c.gradweight_bound + c.E0sq +
                         2.0 * c.C2sq + c.Cstar * (c.E0sq + 2.0 * c.C2sq);
  c.final_l2_bound =
      4.0 * (c.B0 + 3.0 * c.C1sq + c.J1sq + c.gradweight_bound + c.K3sq);

  for (double v : {c.J0sq, c.I0sq, c.I1sq, c.K0sq, c.K1sq, c.K2sq, c.C1sq,
                   c.K3sq, c.J1sq, c.J2sq, c.B0, c.C0, c.E2zero, c.L0sq,
                   c.L1sq, c.E0sq, c.C2sq, c.gradweight_bound,
                   c.final_energy_bound, c.final_l2_bound}) {
    if (!std::isfinite(v)) {
      throw std::runtime_error("constant chain produced a nonfinite value");
    }
  }
  return c;
}

std::pair<double, double> final_decay_bounds(const ConstantLedger& c) {
  return {c.final_energy_bound, c.final_l2_bound};
}

bool VerificationReport::all_pass() const {
  for (const VerificationEntry& e : entries) {
    if (!e.pass) return false;
  }
  return !entries.empty();
}

VerificationReport verify_inequalities(const TraceSeries& trace,
                                       const ConstantLedger& c, double tol) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("verify_inequalities: empty trace");
  }

  // lhs extractors per inequality id, in fixed report order
  struct Row {
    const char* id;
    double rhs;
    double (*lhs)(const TraceSample&, const ConstantLedger&, double e0);
  };
  const double e0 = trace.meta.e0;
  const Row rows[] = {
      {"L2.1", c.J0sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.rec.l2u + s.acc[acc_u];
       }},
      {"E-balance", 1e-8,
       [](const TraceSample& s, const ConstantLedger&, double e0) {
         return std::abs(s.rec.E + s.acc[acc_us] - e0) / std::max(e0, 1e-300);
       }},
      {"P2.1", c.C1sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return (1.0 + s.rec.t) * s.rec.E;
       }},
      {"2.13", c.K2sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_grad_us];
       }},
      {"2.11", c.K1sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_grad_u];
       }},
      {"L3.1", c.K3sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_w_us];
       }},
      {"L3.3", c.J2sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return 0.5 * s.rec.lapu;
       }},
      {"L3.4", c.L0sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return 0.5 * s.rec.lapv + 0.5 * s.acc[acc_lap_us];
       }},
      {"L3.5", c.L1sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_lap_u];
       }},
      {"3.19", c.C2sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_Estar];
       }},
      {"3.20", c.Cstar * (c.E0sq + 2.0 * c.C2sq),
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_w_wpot_u];
       }},
      {"3.21", c.E0sq + 2.0 * c.C2sq,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_w_grad_u];
       }},
      {"gradw", c.gradweight_bound,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return s.acc[acc_w_grad_us];
       }},
      {"T1.1-E", c.final_energy_bound,
       [](const TraceSample& s, const ConstantLedger&, double) {
         const double w = 1.0 + s.rec.t;
         return w * w * s.rec.E;
       }},
      {"T1.1-L2", c.final_l2_bound,
       [](const TraceSample& s, const ConstantLedger&, double) {
         return (1.0 + s.rec.t) * s.rec.l2u;
       }},
  };

  VerificationReport rep;
  rep.tol = tol;
  for (const Row& row : rows) {
    VerificationEntry e;
    e.id = row.id;
    e.rhs = row.rhs;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (const TraceSample& s : trace.samples) {
      const double lhs = row.lhs(s, c, e0);
      const double margin = row.rhs - lhs;
      if (margin < worst_margin || !std::isfinite(margin)) {
        worst_margin = margin;
        e.worst_t = s.rec.t;
        e.lhs = lhs;
        e.margin = margin;
        if (!std::isfinite(margin)) break;
      }
    }
    e.pass = std::isfinite(e.margin) && e.margin >= -tol * e.rhs;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string ledger_to_text(const ConstantLedger& c) {
  std::string out;
  out += "constants\n";
  append_row(out, "eps", c.eps);
  append_row(out, "C_eps", c.Ceps);
  append_row(out, "delta", c.delta);
  append_row(out, "C_delta", c.Cdelta);
  append_row(out, "C_star", c.Cstar);
  append_row(out, "alpha", c.alpha);
  append_row(out, "V_inf", c.vinf);
  append_row(out, "Vp_inf", c.v1inf);
  append_row(out, "Vpp_inf", c.v2inf);
  append_row(out, "E(0)", c.e0);
  append_row(out, "Estar(0)", c.estar0);
  append_row(out, "E2(0)", c.E2zero);
  append_row(out, "wgrad(0)", c.wgrad0);
  append_row(out, "wlap(0)", c.wlap0);
  append_row(out, "J0^2", c.J0sq);
  append_row(out, "I0", c.I0sq);
  append_row(out, "I1^2", c.I1sq);
  append_row(out, "K0^2", c.K0sq);
  append_row(out, "K1^2", c.K1sq);
  append_row(out, "K2^2", c.K2sq);
  append_row(out, "C1^2", c.C1sq);
  append_row(out, "K3^2", c.K3sq);
  append_row(out, "J1^2", c.J1sq);
  append_row(out, "J2^2", c.J2sq);
  append_row(out, "B0", c.B0);
  append_row(out, "C0", c.C0);
  append_row(out, "L0^2", c.L0sq);
  append_row(out, "L1^2", c.L1sq);
  append_row(out, "E0^2", c.E0sq);
  append_row(out, "C2^2", c.C2sq);
  append_row(out, "gradweight_bound", c.gradweight_bound);
  append_row(out, "final_energy_bound", c.final_energy_bound);
  append_row(out, "final_l2_bound", c.final_l2_bound);
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %-6s %14s %14s %14s %14s\n", "id",
                "pass", "worst_t", "lhs", "rhs", "margin");
  out += buf;
  for (const VerificationEntry& e : r.entries) {
    std::snprintf(buf, sizeof buf, "%-10s %-6s %14.6g %14.6g %14.6g %14.6g\n",
                  e.id.c_str(), e.pass ? "PASS" : "FAIL", e.worst_t, e.lhs,
                  e.rhs, e.margin);
    out += buf;
  }
  return out;
}

std::string report_to_csv(const VerificationReport& r) {
  std::string out = "id,lhs,rhs,margin,pass\n";
  char buf[256];
  for (const VerificationEntry& e : r.entries) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%d\n", e.id.c_str(),
                  e.lhs, e.rhs, e.margin, e.pass ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace rotwave
