#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rotwave/grid.hpp"
#include "rotwave/helmholtz.hpp"
#include "support.hpp"

using namespace rotwave;

TEST_CASE("single-node system reduces to a scalar solve") {
  // At h = 1 the operator row is 1 + 2/h^2 = 3, so solving 3x = 3 gives 1.
  Grid1D g;
  g.L = 1.0;
  g.n = 1;
  g.h = 1.0;
  g.bc = Bc::dirichlet;
  g.nodes = {0.0};
  const HelmholtzSolver s(g);
  const Field x = s.solve(Field{3.0});
  REQUIRE(x.size() == 1);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("three-node round trip at h=1") {
  const Grid1D g = build_grid(2.0, 3, Bc::dirichlet);
  REQUIRE(g.h == doctest::Approx(1.0));
  const HelmholtzSolver s(g);
  // Apply (I + L_h) to (1,1,1) by hand: rows give (2, 1, 2).
  const Field x = s.solve(Field{2.0, 1.0, 2.0});
  for (double xi : x) CHECK(xi == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("solver agrees with a dense factorization oracle") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    CAPTURE(static_cast<int>(bc));
    const Grid1D g = build_grid(4.0, 50, bc);
    const Field b = testsup::random_field(g.n, 31);
    const HelmholtzSolver s(g);
    const Field x = s.solve(b);
    const Field xd = testsup::dense_helmholtz_solve(g, b);
    CHECK(testsup::linf_diff(x, xd) <= 1e-12 * (1.0 + testsup::linf(xd)));
  }
}

TEST_CASE("residual of the solve is tiny") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    const Grid1D g = build_grid(6.0, 257, bc);
    const Field b = testsup::random_field(g.n, 32);
    const HelmholtzSolver s(g);
    const Field x = s.solve(b);
    const Field lx = neg_laplacian(g, x);
    double resid = 0.0;
    for (int i = 0; i < g.n; ++i) {
      resid = std::max(resid, std::abs(x[i] + lx[i] - b[i]));
    }
    CHECK(resid <= 1e-11 * (1.0 + testsup::linf(b)));
  }
}

TEST_CASE("factorization pivots stay positive") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    const Grid1D g = build_grid(5.0, 401, bc);
    const HelmholtzSolver s(g);
    CHECK(s.min_pivot() > 0.0);
    CHECK(s.size() == g.n);
  }
}

TEST_CASE("resolvent identity: L_h J w = w - J w") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    const Grid1D g = build_grid(3.0, 128, bc);
    const Field w = testsup::random_field(g.n, 33);
    const HelmholtzSolver s(g);
    const Field jw = s.solve(w);
    const Field ljw = neg_laplacian(g, jw);
    double defect = 0.0;
    for (int i = 0; i < g.n; ++i) {
      defect = std::max(defect, std::abs(ljw[i] - (w[i] - jw[i])));
    }
    CHECK(defect <= 1e-12 * (1.0 + testsup::linf(w)));
  }
}

TEST_CASE("resolvent is an L2 contraction") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    const Grid1D g = build_grid(3.0, 200, bc);
    const Field w = testsup::random_field(g.n, 34);
    const HelmholtzSolver s(g);
    const Field jw = s.solve(w);
    CHECK(norm_sq(g, jw) <= norm_sq(g, w) * (1.0 + 1e-14));
  }
}

TEST_CASE("in-place solve matches the out-of-place solve") {
  for (Bc bc : {Bc::dirichlet, Bc::periodic}) {
    const Grid1D g = build_grid(2.0, 77, bc);
    const Field b = testsup::random_field(g.n, 35);
    const HelmholtzSolver s(g);
    const Field x = s.solve(b);
    Field y = b;
    s.solve(y, y);  // aliased input/output
    CHECK(testsup::linf_diff(x, y) == 0.0);
  }
}
