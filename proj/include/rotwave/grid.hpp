#pragma once

#include <span>
#include <vector>

// Discrete geometry of the truncated line [-L, L] and the spatial operators
// built on it: the 3-point stencil L_h realizing -d^2/dx^2, the scaled inner
// product (f,g)_h = h*sum f_i g_i, and the squared norms entering the
// energies.  The gradient norm is evaluated in summation-by-parts (edge
// difference) form, which agrees with (L_h f, f)_h and is manifestly
// nonnegative.

namespace rotwave {

enum class Bc { dirichlet, periodic };

using Field = std::vector<double>;

struct Grid1D {
  double L = 0.0;  ///< half-width of [-L, L]
  int n = 0;       ///< stored node count
  double h = 0.0;  ///< spacing: 2L/(n+1) dirichlet, 2L/n periodic
  Bc bc = Bc::dirichlet;
  std::vector<double> nodes;  ///< coordinates of the stored nodes
};

/// Builds the grid; dirichlet nodes exclude the endpoints (boundary values
/// are identically zero), periodic nodes start at -L and exclude +L.
/// Throws std::invalid_argument for L <= 0 or n < 3.
Grid1D build_grid(double L, int n, Bc bc);

/// Throws std::invalid_argument when f is not sized for g.
void require_on_grid(const Grid1D& g, std::span<const double> f);

/// out = L_h f  (3-point stencil, zero or wrap-around neighbors)
void neg_laplacian(const Grid1D& g, std::span<const double> f, std::span<double> out);
Field neg_laplacian(const Grid1D& g, const Field& f);

/// (f, g)_h = h * sum_i f_i g_i
double inner(const Grid1D& g, std::span<const double> f, std::span<const double> b);

/// ||f||_h^2
double norm_sq(const Grid1D& g, std::span<const double> f);

/// ||grad f||_h^2 in edge-difference form (includes the boundary edges for
/// dirichlet grids); equals inner(L_h f, f) up to roundoff.
double grad_norm_sq(const Grid1D& g, std::span<const double> f);

/// (grad f, grad g)_h in edge-difference form; equals inner(L_h f, g).
double grad_inner(const Grid1D& g, std::span<const double> f, std::span<const double> b);

/// ||L_h f||_h^2
double lap_norm_sq(const Grid1D& g, std::span<const double> f);

/// h * sum over edges of w_e * ((f_right - f_left)/h)^2 with caller-supplied
/// edge weights (typically a potential sampled at edge midpoints).
double weighted_grad_sq(const Grid1D& g, std::span<const double> f,
                        std::span<const double> edge_weights);

/// Number of edges carrying weights: n+1 for dirichlet, n for periodic.
std::size_t edge_count(const Grid1D& g);

/// Edge midpoint coordinates, matching edge_count(g).
std::vector<double> edge_midpoints(const Grid1D& g);

struct NormTriple {
  double l2_sq = 0.0;
  double grad_sq = 0.0;
  double lap_sq = 0.0;
};

/// All three squared norms of one field in a single call.
NormTriple norm_triple(const Grid1D& g, std::span<const double> f);

}  // namespace rotwave
