#pragma once

#include <optional>
#include <string>

#include "rotwave/appendix.hpp"
#include "rotwave/fit.hpp"
#include "rotwave/ledger.hpp"
#include "rotwave/trace.hpp"

namespace rotwave {

/// Human-readable run report: metadata header, constants block, inequality
/// table, decay fit, and (optionally) the operator-check block.
std::string assemble_report(const RunMetadata& meta,
                            const ConstantLedger& ledger,
                            const VerificationReport& verification,
                            const std::optional<DecayFit>& fit,
                            const std::string& fit_note,
                            const std::optional<AppendixSummary>& appendix);

}  // namespace rotwave
