#include "rotwave/grid.hpp"

#include <stdexcept>
#include <string>

#include "rotwave/kernels.hpp"

namespace rotwave {

Grid1D build_grid(double L, int n, Bc bc) {
  if (!(L > 0.0)) throw std::invalid_argument("grid: half-width L must be positive");
  if (n < 3) throw std::invalid_argument("grid: need at least 3 nodes, got " + std::to_string(n));
  Grid1D g;
  g.L = L;
  g.n = n;
  g.bc = bc;
  g.h = bc == Bc::dirichlet ? 2.0 * L / (n + 1) : 2.0 * L / n;
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i)
    g.nodes[i] = bc == Bc::dirichlet ? -L + (i + 1) * g.h : -L + i * g.h;
  return g;
}

void require_on_grid(const Grid1D& g, std::span<const double> f) {
  if (f.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("field size " + std::to_string(f.size()) +
                                " does not match grid with n = " + std::to_string(g.n));
}

void neg_laplacian(const Grid1D& g, std::span<const double> f, std::span<double> out) {
  require_on_grid(g, f);
  require_on_grid(g, out);
  if (g.bc == Bc::dirichlet)
    kern::neg_lap_dirichlet(g.h, f, out);
  else
    kern::neg_lap_periodic(g.h, f, out);
}

Field neg_laplacian(const Grid1D& g, const Field& f) {
  Field out(f.size());
  neg_laplacian(g, f, out);
  return out;
}

double inner(const Grid1D& g, std::span<const double> f, std::span<const double> b) {
  require_on_grid(g, f);
  require_on_grid(g, b);
  return g.h * kern::dot(f, b);
}

double norm_sq(const Grid1D& g, std::span<const double> f) { return inner(g, f, f); }

double grad_norm_sq(const Grid1D& g, std::span<const double> f) {
  require_on_grid(g, f);
  return g.bc == Bc::dirichlet ? kern::edge_energy_dirichlet(g.h, f, {})
                               : kern::edge_energy_periodic(g.h, f, {});
}

double grad_inner(const Grid1D& g, std::span<const double> f, std::span<const double> b) {
  require_on_grid(g, f);
  require_on_grid(g, b);
  return g.bc == Bc::dirichlet ? kern::edge_cross_dirichlet(g.h, f, b)
                               : kern::edge_cross_periodic(g.h, f, b);
}

double lap_norm_sq(const Grid1D& g, std::span<const double> f) {
  Field lap(f.size());
  neg_laplacian(g, f, lap);
  return g.h * kern::dot(lap, lap);
}

double weighted_grad_sq(const Grid1D& g, std::span<const double> f,
                        std::span<const double> edge_weights) {
  require_on_grid(g, f);
  if (edge_weights.size() != edge_count(g))
    throw std::invalid_argument("edge weight count does not match grid");
  return g.bc == Bc::dirichlet ? kern::edge_energy_dirichlet(g.h, f, edge_weights)
                               : kern::edge_energy_periodic(g.h, f, edge_weights);
}

std::size_t edge_count(const Grid1D& g) {
  return g.bc == Bc::dirichlet ? static_cast<std::size_t>(g.n) + 1
                               : static_cast<std::size_t>(g.n);
}

std::vector<double> edge_midpoints(const Grid1D& g) {
  std::vector<double> mid(edge_count(g));
  // Edge e joins node e-1 to node e (dirichlet, with the boundary as
  // virtual nodes) or node e to node e+1 (periodic).
  for (std::size_t e = 0; e < mid.size(); ++e)
    mid[e] = g.bc == Bc::dirichlet ? -g.L + (static_cast<double>(e) + 0.5) * g.h
                                   : g.nodes[e] + 0.5 * g.h;
  return mid;
}

NormTriple norm_triple(const Grid1D& g, std::span<const double> f) {
  NormTriple t;
  t.l2_sq = norm_sq(g, f);
  t.grad_sq = grad_norm_sq(g, f);
  t.lap_sq = lap_norm_sq(g, f);
  return t;
}

}  // namespace rotwave
