#pragma once

#include <optional>
#include <string>

#include "rotwave/fit.hpp"
#include "rotwave/trace.hpp"

namespace rotwave {

/// Self-contained two-panel SVG: left, log10 E against log10(1+t) with the
/// fitted decay line; right, (1+t)^2 E against t with the horizontal bound
/// line.  Samples with E <= 0 are skipped on the left panel (log scale); a
/// fully nonpositive trace renders an explanatory message instead of axes.
std::string render_decay_svg(const TraceSeries& trace,
                             const std::optional<DecayFit>& fit,
                             std::optional<double> energy_bound);

}  // namespace rotwave
