#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "rotwave/grid.hpp"

// Shared helpers for the unit tests: seeded random fields, max-norm
// comparison, and an independent dense Gaussian-elimination solver used as
// the oracle for the banded Helmholtz factorization.

namespace testsup {

inline std::vector<double> random_field(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> f(static_cast<std::size_t>(n));
  for (double& x : f) x = dist(rng);
  return f;
}

inline double linf_diff(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

inline double linf(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

// Dense (I + L_h) assembled entry by entry and solved by Gaussian
// elimination with partial pivoting — deliberately naive and independent of
// the production factorization.
inline std::vector<double> dense_helmholtz_solve(const rotwave::Grid1D& g,
                                                 std::vector<double> b) {
  const int n = g.n;
  const double d = 1.0 + 2.0 / (g.h * g.h);
  const double o = -1.0 / (g.h * g.h);
  std::vector<double> A(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    A[static_cast<std::size_t>(i) * n + i] = d;
    if (i > 0) A[static_cast<std::size_t>(i) * n + i - 1] = o;
    if (i + 1 < n) A[static_cast<std::size_t>(i) * n + i + 1] = o;
  }
  if (g.bc == rotwave::Bc::periodic) {
    A[static_cast<std::size_t>(0) * n + n - 1] += o;
    A[static_cast<std::size_t>(n - 1) * n + 0] += o;
  }

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(A[static_cast<std::size_t>(r) * n + col]) >
          std::abs(A[static_cast<std::size_t>(piv) * n + col])) {
        piv = r;
      }
    }
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(A[static_cast<std::size_t>(col) * n + c],
                  A[static_cast<std::size_t>(piv) * n + c]);
      }
      std::swap(b[static_cast<std::size_t>(col)],
                b[static_cast<std::size_t>(piv)]);
    }
    const double p = A[static_cast<std::size_t>(col) * n + col];
    if (p == 0.0) throw std::runtime_error("dense oracle: singular matrix");
    for (int r = col + 1; r < n; ++r) {
      const double f = A[static_cast<std::size_t>(r) * n + col] / p;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) {
        A[static_cast<std::size_t>(r) * n + c] -=
            f * A[static_cast<std::size_t>(col) * n + c];
      }
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double s = b[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c) {
      s -= A[static_cast<std::size_t>(r) * n + c] * x[static_cast<std::size_t>(c)];
    }
    x[static_cast<std::size_t>(r)] = s / A[static_cast<std::size_t>(r) * n + r];
  }
  return x;
}

}  // namespace testsup
