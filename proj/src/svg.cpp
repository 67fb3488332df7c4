#include "rotwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace rotwave {

namespace {

constexpr double panel_w = 420.0;
constexpr double panel_h = 360.0;
constexpr double margin_l = 70.0;
constexpr double margin_r = 20.0;
constexpr double margin_t = 40.0;
constexpr double margin_b = 50.0;

struct Axis {
  double x0, x1, y0, y1;  // data ranges
  double px, py;          // panel origin in page coordinates

  double X(double x) const {
    return px + margin_l +
           (x - x0) / (x1 - x0) * (panel_w - margin_l - margin_r);
  }
  double Y(double y) const {
    return py + panel_h - margin_b -
           (y - y0) / (y1 - y0) * (panel_h - margin_t - margin_b);
  }
};

void pad_range(double& a, double& b) {
  if (a == b) {
    a -= 0.5;
    b += 0.5;
  } else {
    const double pad = 0.05 * (b - a);
    a -= pad;
    b += pad;
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void frame(std::string& out, const Axis& ax, const std::string& title,
           const std::string& xlabel, const std::string& ylabel) {
  char buf[512];
  const double x0 = ax.px + margin_l, x1 = ax.px + panel_w - margin_r;
  const double y0 = ax.py + margin_t, y1 = ax.py + panel_h - margin_b;
  std::snprintf(buf, sizeof buf,
                "<rect x='%.1f' y='%.1f' width='%.1f' height='%.1f' "
                "fill='none' stroke='black'/>\n",
                x0, y0, x1 - x0, y1 - y0);
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x='%.1f' y='%.1f' text-anchor='middle' "
                "font-size='14'>%s</text>\n",
                (x0 + x1) / 2, ax.py + 22.0, title.c_str());
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x='%.1f' y='%.1f' text-anchor='middle' "
                "font-size='12'>%s</text>\n",
                (x0 + x1) / 2, y1 + 35.0, xlabel.c_str());
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x='%.1f' y='%.1f' text-anchor='middle' font-size='12' "
                "transform='rotate(-90 %.1f %.1f)'>%s</text>\n",
                ax.px + 16.0, (y0 + y1) / 2, ax.px + 16.0, (y0 + y1) / 2,
                ylabel.c_str());
  out += buf;
  // corner tick labels
  std::snprintf(buf, sizeof buf,
                "<text x='%.1f' y='%.1f' font-size='10'>%s</text>\n"
                "<text x='%.1f' y='%.1f' text-anchor='end' "
                "font-size='10'>%s</text>\n",
                x0, y1 + 14.0, fmt(ax.x0).c_str(), x1, y1 + 14.0,
                fmt(ax.x1).c_str());
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x='%.1f' y='%.1f' text-anchor='end' "
                "font-size='10'>%s</text>\n"
                "<text x='%.1f' y='%.1f' text-anchor='end' "
                "font-size='10'>%s</text>\n",
                x0 - 4.0, y1, fmt(ax.y0).c_str(), x0 - 4.0, y0 + 10.0,
                fmt(ax.y1).c_str());
  out += buf;
}

void polyline(std::string& out, const Axis& ax,
              const std::vector<std::pair<double, double>>& pts,
              const char* color, double width) {
  if (pts.empty()) return;
  out += "<polyline fill='none' stroke='";
  out += color;
  char buf[64];
  std::snprintf(buf, sizeof buf, "' stroke-width='%.1f' points='", width);
  out += buf;
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", ax.X(x), ax.Y(y));
    out += buf;
  }
  out += "'/>\n";
}

}  // namespace

std::string render_decay_svg(const TraceSeries& trace,
                             const std::optional<DecayFit>& fit,
                             std::optional<double> energy_bound) {
  const double page_w = 2 * panel_w + 20.0;
  const double page_h = panel_h;
  char buf[256];
  std::string out;
  if (trace.samples.empty()) {
    return "<svg xmlns='http://www.w3.org/2000/svg' width='300' height='40'>"
           "<text x='10' y='25' font-size='13'>empty trace</text></svg>\n";
  }
  std::snprintf(buf, sizeof buf,
                "<svg xmlns='http://www.w3.org/2000/svg' width='%.0f' "
                "height='%.0f' viewBox='0 0 %.0f %.0f'>\n"
                "<rect width='%.0f' height='%.0f' fill='white'/>\n",
                page_w, page_h, page_w, page_h, page_w, page_h);
  out += buf;

  // left panel: log-log decay
  std::vector<std::pair<double, double>> loglog;
  for (const TraceSample& s : trace.samples) {
    if (s.rec.E > 0.0) {
      loglog.emplace_back(std::log10(1.0 + s.rec.t), std::log10(s.rec.E));
    }
  }
  if (loglog.size() >= 2) {
    Axis ax;
    ax.px = 0.0;
    ax.py = 0.0;
    ax.x0 = loglog.front().first;
    ax.x1 = loglog.back().first;
    auto [lo, hi] = std::minmax_element(
        loglog.begin(), loglog.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    ax.y0 = lo->second;
    ax.y1 = hi->second;
    pad_range(ax.x0, ax.x1);
    pad_range(ax.y0, ax.y1);
    frame(out, ax, "energy decay", "log10(1+t)", "log10 E");
    polyline(out, ax, loglog, "steelblue", 1.5);
    if (fit) {
      const double ln10 = std::log(10.0);
      auto line_y = [&](double x10) {
        // fit lives in natural logs; convert both axes
        return (fit->intercept + fit->slope * (x10 * ln10)) / ln10;
      };
      const double xa = std::log10(1.0 + fit->t_min);
      const double xb = std::log10(1.0 + fit->t_max);
      polyline(out, ax, {{xa, line_y(xa)}, {xb, line_y(xb)}}, "crimson", 1.5);
      std::snprintf(buf, sizeof buf,
                    "<text x='%.1f' y='%.1f' font-size='12' "
                    "fill='crimson'>slope %.3f</text>\n",
                    ax.px + margin_l + 8.0, ax.py + margin_t + 16.0,
                    fit->slope);
      out += buf;
    }
  } else {
    out +=
        "<text x='40' y='60' font-size='13'>energy not positive; "
        "log plot skipped</text>\n";
  }

  // right panel: scaled energy against its bound
  {
    std::vector<std::pair<double, double>> scaled;
    for (const TraceSample& s : trace.samples) {
      const double w = 1.0 + s.rec.t;
      scaled.emplace_back(s.rec.t, w * w * s.rec.E);
    }
    Axis ax;
    ax.px = panel_w + 20.0;
    ax.py = 0.0;
    ax.x0 = scaled.front().first;
    ax.x1 = scaled.back().first;
    double ymin = 0.0, ymax = 0.0;
    for (const auto& [x, y] : scaled) ymax = std::max(ymax, y);
    if (energy_bound) ymax = std::max(ymax, *energy_bound);
    ax.y0 = ymin;
    ax.y1 = ymax;
    pad_range(ax.x0, ax.x1);
    pad_range(ax.y0, ax.y1);
    frame(out, ax, "scaled energy vs bound", "t", "(1+t)^2 E");
    polyline(out, ax, scaled, "steelblue", 1.5);
    if (energy_bound) {
      polyline(out, ax,
               {{scaled.front().first, *energy_bound},
                {scaled.back().first, *energy_bound}},
               "crimson", 1.5);
      std::snprintf(buf, sizeof buf,
                    "<text x='%.1f' y='%.1f' font-size='12' fill='crimson'>"
                    "bound %.6g</text>\n",
                    ax.px + margin_l + 8.0, ax.py + margin_t + 16.0,
                    *energy_bound);
      out += buf;
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace rotwave
