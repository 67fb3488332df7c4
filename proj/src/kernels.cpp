#include "rotwave/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <vector>

namespace rotwave::kern {

namespace {

std::atomic<std::size_t> g_parallel_threshold{32768};

// Sums block_partial(lo, hi) over fixed-size index blocks, combining the
// block partials in index order.  The partials may be computed in parallel;
// the result is identical either way.
template <class F>
double blocked_sum(std::size_t count, F&& block_partial) {
  const std::size_t nb = count == 0 ? 0 : (count + reduce_block - 1) / reduce_block;
  double total = 0.0;
#ifdef _OPENMP
  if (count >= parallel_threshold() && nb > 1) {
    std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nb); ++j) {
      const std::size_t lo = static_cast<std::size_t>(j) * reduce_block;
      partial[static_cast<std::size_t>(j)] =
          block_partial(lo, std::min(lo + reduce_block, count));
    }
    for (double p : partial) total += p;
    return total;
  }
#endif
  for (std::size_t j = 0; j < nb; ++j) {
    const std::size_t lo = j * reduce_block;
    total += block_partial(lo, std::min(lo + reduce_block, count));
  }
  return total;
}

template <class F>
void elementwise(std::size_t count, F&& body) {
#ifdef _OPENMP
  if (count >= parallel_threshold()) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace

std::size_t parallel_threshold() {
  return g_parallel_threshold.load(std::memory_order_relaxed);
}

void set_parallel_threshold(std::size_t n) {
  g_parallel_threshold.store(n, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return blocked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  });
}

double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b) {
  assert(w.size() == a.size() && a.size() == b.size());
  return blocked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += w[i] * a[i] * b[i];
    return s;
  });
}

void neg_lap_dirichlet(double h, std::span<const double> f, std::span<double> out) {
  assert(f.size() == out.size() && !f.empty());
  const std::size_t n = f.size();
  const double ih2 = 1.0 / (h * h);
  if (n == 1) {
    out[0] = 2.0 * f[0] * ih2;
    return;
  }
  out[0] = (2.0 * f[0] - f[1]) * ih2;
  out[n - 1] = (2.0 * f[n - 1] - f[n - 2]) * ih2;
  elementwise(n - 2, [&](std::size_t j) {
    const std::size_t i = j + 1;
    out[i] = (2.0 * f[i] - f[i - 1] - f[i + 1]) * ih2;
  });
}

void neg_lap_periodic(double h, std::span<const double> f, std::span<double> out) {
  assert(f.size() == out.size() && f.size() >= 3);
  const std::size_t n = f.size();
  const double ih2 = 1.0 / (h * h);
  out[0] = (2.0 * f[0] - f[n - 1] - f[1]) * ih2;
  out[n - 1] = (2.0 * f[n - 1] - f[n - 2] - f[0]) * ih2;
  elementwise(n - 2, [&](std::size_t j) {
    const std::size_t i = j + 1;
    out[i] = (2.0 * f[i] - f[i - 1] - f[i + 1]) * ih2;
  });
}

double edge_energy_dirichlet(double h, std::span<const double> f,
                             std::span<const double> weights) {
  const std::size_t n = f.size();
  assert(weights.empty() || weights.size() == n + 1);
  const double sum = blocked_sum(n + 1, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t e = lo; e < hi; ++e) {
      const double left = e == 0 ? 0.0 : f[e - 1];
      const double right = e == n ? 0.0 : f[e];
      const double d = right - left;
      s += weights.empty() ? d * d : weights[e] * d * d;
    }
    return s;
  });
  return sum / h;
}

double edge_energy_periodic(double h, std::span<const double> f,
                            std::span<const double> weights) {
  const std::size_t n = f.size();
  assert(weights.empty() || weights.size() == n);
  const double sum = blocked_sum(n, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t e = lo; e < hi; ++e) {
      const double d = f[e + 1 == n ? 0 : e + 1] - f[e];
      s += weights.empty() ? d * d : weights[e] * d * d;
    }
    return s;
  });
  return sum / h;
}

double edge_cross_dirichlet(double h, std::span<const double> f,
                            std::span<const double> g) {
  assert(f.size() == g.size());
  const std::size_t n = f.size();
  const double sum = blocked_sum(n + 1, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t e = lo; e < hi; ++e) {
      const double df = (e == n ? 0.0 : f[e]) - (e == 0 ? 0.0 : f[e - 1]);
      const double dg = (e == n ? 0.0 : g[e]) - (e == 0 ? 0.0 : g[e - 1]);
      s += df * dg;
    }
    return s;
  });
  return sum / h;
}

double edge_cross_periodic(double h, std::span<const double> f,
                           std::span<const double> g) {
  assert(f.size() == g.size());
  const std::size_t n = f.size();
  const double sum = blocked_sum(n, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t e = lo; e < hi; ++e) {
      const std::size_t r = e + 1 == n ? 0 : e + 1;
      s += (f[r] - f[e]) * (g[r] - g[e]);
    }
    return s;
  });
  return sum / h;
}

void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  elementwise(a.size(), [&](std::size_t i) { out[i] = a[i] * b[i]; });
}

void neg_add3(std::span<const double> a, std::span<const double> b,
              std::span<const double> c, std::span<double> out) {
  assert(a.size() == out.size());
  elementwise(a.size(), [&](std::size_t i) { out[i] = -(a[i] + b[i] + c[i]); });
}

void stage_state(std::span<const double> y, double a, std::span<const double> k,
                 std::span<double> out) {
  assert(y.size() == k.size() && y.size() == out.size());
  elementwise(y.size(), [&](std::size_t i) { out[i] = y[i] + a * k[i]; });
}

void rk4_combine(std::span<double> y, double dt, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4) {
  assert(y.size() == k1.size());
  const double c = dt / 6.0;
  elementwise(y.size(), [&](std::size_t i) {
    y[i] += c * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  });
}

}  // namespace rotwave::kern

namespace rotwave::refimpl {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i] * b[i];
  return s;
}

void neg_lap_dirichlet(double h, std::span<const double> f, std::span<double> out) {
  const std::size_t n = f.size();
  const double ih2 = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 0.0 : f[i - 1];
    const double right = i + 1 == n ? 0.0 : f[i + 1];
    out[i] = (2.0 * f[i] - left - right) * ih2;
  }
}

void neg_lap_periodic(double h, std::span<const double> f, std::span<double> out) {
  const std::size_t n = f.size();
  const double ih2 = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = f[(i + n - 1) % n];
    const double right = f[(i + 1) % n];
    out[i] = (2.0 * f[i] - left - right) * ih2;
  }
}

double edge_energy_dirichlet(double h, std::span<const double> f,
                             std::span<const double> weights) {
  const std::size_t n = f.size();
  double s = 0.0;
  for (std::size_t e = 0; e <= n; ++e) {
    const double d = (e == n ? 0.0 : f[e]) - (e == 0 ? 0.0 : f[e - 1]);
    s += weights.empty() ? d * d : weights[e] * d * d;
  }
  return s / h;
}

double edge_energy_periodic(double h, std::span<const double> f,
                            std::span<const double> weights) {
  const std::size_t n = f.size();
  double s = 0.0;
  for (std::size_t e = 0; e < n; ++e) {
    const double d = f[(e + 1) % n] - f[e];
    s += weights.empty() ? d * d : weights[e] * d * d;
  }
  return s / h;
}

void stage_state(std::span<const double> y, double a, std::span<const double> k,
                 std::span<double> out) {
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + a * k[i];
}

}  // namespace rotwave::refimpl
