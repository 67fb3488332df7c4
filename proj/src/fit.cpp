#include "rotwave/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rotwave {

DecayFit fit_decay(const TraceSeries& trace, double t_min, double t_max) {
  if (!(t_min < t_max)) {
    throw std::invalid_argument("fit window is empty");
  }
  std::vector<double> xs, ys;
  for (const TraceSample& s : trace.samples) {
    const double t = s.rec.t;
    if (t < t_min || t > t_max) continue;
    if (!(s.rec.E > 0.0)) {
      throw std::invalid_argument("nonpositive energy inside the fit window");
    }
    xs.push_back(std::log1p(t));
    ys.push_back(std::log(s.rec.E));
  }
  if (xs.size() < 10) {
    throw std::invalid_argument("fit window holds fewer than 10 samples");
  }

  const double m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit window has no time spread");
  }

  DecayFit f;
  f.t_min = t_min;
  f.t_max = t_max;
  f.count = static_cast<int>(xs.size());
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (f.intercept + f.slope * xs[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / m);
  return f;
}

std::pair<double, double> default_fit_window(const TraceSeries& trace,
                                             const PotentialSpec& spec) {
  const double vL = eval_potential(spec, trace.meta.L).v;
  const double horizon = vL > 0.0 ? 0.2 / vL : trace.meta.T;
  return {10.0, std::min(trace.meta.T, horizon)};
}

}  // namespace rotwave
