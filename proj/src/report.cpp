#include "rotwave/report.hpp"

#include <cstdio>

namespace rotwave {

std::string assemble_report(const RunMetadata& meta,
                            const ConstantLedger& ledger,
                            const VerificationReport& verification,
                            const std::optional<DecayFit>& fit,
                            const std::string& fit_note,
                            const std::optional<AppendixSummary>& appendix) {
  char buf[512];
  std::string out = "damped wave decay run\n";
  std::snprintf(buf, sizeof buf,
                "  L            %.17g\n"
                "  n            %d\n"
                "  bc           %s\n"
                "  h            %.17g\n"
                "  dt           %.17g\n"
                "  T            %.17g\n"
                "  sample_every %d\n",
                meta.L, meta.n,
                meta.bc == Bc::dirichlet ? "dirichlet" : "periodic", meta.h,
                meta.dt, meta.T, meta.sample_every);
  out += buf;
  out += "  potential    " + meta.potential_desc + "\n";
  out += "  data         " + meta.data_desc + "\n";
  std::snprintf(buf, sizeof buf,
                "  V(L)         %.17g\n"
                "  E(0)         %.17g\n",
                meta.v_at_boundary, meta.e0);
  out += buf;
  for (const std::string& w : meta.warnings) {
    out += "  warning: " + w + "\n";
  }
  out +=
      "note: composite constants are assembled in their fully summed "
      "derivation-chain forms\n\n";

  out += ledger_to_text(ledger);

  std::snprintf(buf, sizeof buf, "\ninequalities (relative slack %.1g)  %s\n",
                verification.tol,
                verification.all_pass() ? "[all pass]" : "[FAILURES]");
  out += buf;
  out += report_to_text(verification);

  out += "\nfit\n";
  if (fit) {
    std::snprintf(buf, sizeof buf,
                  "  window       [%.17g, %.17g]  (%d samples)\n"
                  "  slope        %.17g\n"
                  "  intercept    %.17g\n"
                  "  rms          %.17g\n",
                  fit->t_min, fit->t_max, fit->count, fit->slope,
                  fit->intercept, fit->rms);
    out += buf;
  }
  if (!fit_note.empty()) {
    out += "  " + fit_note + "\n";
  }

  if (appendix) {
    out += "\n";
    out += appendix->to_text();
  }
  return out;
}

}  // namespace rotwave
