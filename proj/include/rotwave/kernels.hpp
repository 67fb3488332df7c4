#pragma once

#include <cstddef>
#include <span>

// Low-level array kernels shared by the grid operators and the time stepper.
//
// Every kernel in rotwave::kern is bitwise deterministic regardless of the
// thread count: reductions accumulate fixed-size blocks in index order and
// only the block partials are computed in parallel, so enabling OpenMP (or
// changing OMP_NUM_THREADS) never changes a single output bit.  The plain
// textbook loops live in rotwave::refimpl and are kept as an independent
// serial reference for tests and benchmarks.

namespace rotwave::kern {

/// Block length used by all deterministic reductions.
inline constexpr std::size_t reduce_block = 2048;

/// Arrays at least this long are processed with OpenMP; shorter ones run the
/// same blocked code serially.  Thread-count-independent by construction.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t n);

/// sum_i a[i]*b[i]
double dot(std::span<const double> a, std::span<const double> b);

/// sum_i w[i]*a[i]*b[i]
double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b);

/// out[i] = (2f[i] - f[i-1] - f[i+1])/h^2 with zero neighbors outside.
void neg_lap_dirichlet(double h, std::span<const double> f, std::span<double> out);

/// Same stencil with wrap-around neighbors.
void neg_lap_periodic(double h, std::span<const double> f, std::span<double> out);

/// (1/h) * sum over edges of w_e * (f_right - f_left)^2, where the edge set
/// includes the two boundary edges against the zero exterior.  Pass
/// weights = {} for the unweighted sum; otherwise weights.size() == n+1.
double edge_energy_dirichlet(double h, std::span<const double> f,
                             std::span<const double> weights);

/// Periodic counterpart with n edges (the last wraps); weights.size() == n.
double edge_energy_periodic(double h, std::span<const double> f,
                            std::span<const double> weights);

/// (1/h) * sum over edges of (f_right - f_left)*(g_right - g_left), dirichlet
/// edge set.  Equals inner(L_h f, g) up to roundoff (summation by parts).
double edge_cross_dirichlet(double h, std::span<const double> f,
                            std::span<const double> g);
double edge_cross_periodic(double h, std::span<const double> f,
                           std::span<const double> g);

/// out[i] = a[i]*b[i]
void mul(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// out[i] = -(a[i] + b[i] + c[i])
void neg_add3(std::span<const double> a, std::span<const double> b,
              std::span<const double> c, std::span<double> out);

/// out[i] = y[i] + a*k[i]   (RK stage state)
void stage_state(std::span<const double> y, double a, std::span<const double> k,
                 std::span<double> out);

/// y[i] += (dt/6)*(k1[i] + 2*(k2[i] + k3[i]) + k4[i])   (RK4 update)
void rk4_combine(std::span<double> y, double dt, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4);

}  // namespace rotwave::kern

namespace rotwave::refimpl {

// Unblocked single-pass versions of the reductions and stencils above.
// Reductions accumulate left to right, so results may differ from
// rotwave::kern in the last bits; tests compare at roundoff tolerance.

double dot(std::span<const double> a, std::span<const double> b);
double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b);
void neg_lap_dirichlet(double h, std::span<const double> f, std::span<double> out);
void neg_lap_periodic(double h, std::span<const double> f, std::span<double> out);
double edge_energy_dirichlet(double h, std::span<const double> f,
                             std::span<const double> weights);
double edge_energy_periodic(double h, std::span<const double> f,
                            std::span<const double> weights);
void stage_state(std::span<const double> y, double a, std::span<const double> k,
                 std::span<double> out);

}  // namespace rotwave::refimpl
