#include <doctest.h>

#include <cmath>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"
#include "ghl/functionals.hpp"
#include "ghl/hierarchy.hpp"

using namespace ghl;

namespace {
const Grid kGrid(40, 2048);
const BreatherParams kB{1.0, 1.1, 0.3, 1, 0, 0};

GridFunction bump(double centre, double width) {
  return GridFunction::sample(kGrid, [=](double x) {
    const double y = (x - centre) / width;
    return (1 + 0.5 * y) * std::exp(-y * y);
  });
}
}  // namespace

TEST_CASE("mass of sech") {
  const GridFunction f = GridFunction::sample(kGrid, [](double x) { return 1 / std::cosh(x); });
  CHECK(mass(f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("soliton ODE selects the c^2 dispersion") {
  const SolitonSolution s({1.3, 0.3, 1});
  const DerivativeStack q = analytic_stack(s, 0, kGrid, 2);
  CHECK(soliton_ode_residual(q, 1.3, 0.3).relative() < 1e-12);
  CHECK(soliton_ode_residual(q, 1.3, 0.3, SolitonDispersion::linear_c).relative() > 1e-2);
}

TEST_CASE("universal ODE holds for every flow and fails off-shell") {
  for (int n = 1; n <= 3; ++n) {
    BreatherParams p = kB;
    p.n = n;
    const DerivativeStack s = analytic_stack(BreatherSolution(p), 0.2, kGrid, 4);
    CHECK(universal_ode_residual(s, p.mu, p.alpha, p.beta).relative() < 1e-10);
    CHECK(universal_ode_residual(s, p.mu, p.alpha * 1.1, p.beta).relative() > 1e-3);
  }
}

TEST_CASE("Miura identity and its negative control") {
  for (double x : {-5.0, -0.3, 0.0, 1.7, 12.0})
    CHECK(std::abs(miura_point(kB, 0.4, x)) < 1e-11);
  const GridFunction u = sample_solution(BreatherSolution(kB), 0.4, kGrid);
  CHECK(miura_field_residual(u, kB, 0.4).inf() < 1e-6);
  CHECK(miura_field_residual(u + 0.05 * bump(0, 1), kB, 0.4).inf() > 1e-2);
}

TEST_CASE("PDE residual in both derivative modes") {
  BreatherParams p = kB;
  p.n = 2;
  const BreatherSolution b(p);
  CHECK(pde_residual(gardner_rhs(2), b, 0.3, kGrid, p.mu).relative() < 1e-9);
  CHECK(pde_residual(gardner_rhs(2), b, 0.3, kGrid, p.mu, DerivativeMode::spectral).relative() <
        1e-5);
  CHECK(pde_residual(gardner_rhs(3), b, 0.3, kGrid, p.mu).relative() > 1e-2);
}

TEST_CASE("conserved quantities of the exact breather") {
  const BreatherSolution b(kB);
  const SpectralCoefficients w{kB.alpha, kB.beta};
  const GridFunction u0 = sample_solution(b, 0, kGrid), u1 = sample_solution(b, 0.5, kGrid);
  CHECK(mass(u1) == doctest::Approx(mass(u0)).epsilon(1e-12));
  CHECK(energy(u1, kB.mu) == doctest::Approx(energy(u0, kB.mu)).epsilon(1e-12));
  CHECK(higher_energy(u1, kB.mu) == doctest::Approx(higher_energy(u0, kB.mu)).epsilon(1e-12));
  CHECK(lyapunov(u1, kB.mu, w) == doctest::Approx(lyapunov(u0, kB.mu, w)).epsilon(1e-12));
}

TEST_CASE("bilinear form is the symmetrized quadratic form") {
  const GridFunction B = sample_solution(BreatherSolution(kB), 0, kGrid);
  const DerivativeStack s = spectral_stack(B, 2);
  const GridFunction z1 = bump(-1, 1.5), z2 = bump(2, 2);
  const double b12 = bilinear_form(z1, z2, s, kB.mu, kB.alpha, kB.beta);
  const double b21 = bilinear_form(z2, z1, s, kB.mu, kB.alpha, kB.beta);
  CHECK(b12 == doctest::Approx(b21).epsilon(1e-12));
  const double half = 0.5 * (quadrature(z1 * linearized_apply(s, z2, kB.mu, kB.alpha, kB.beta)) +
                             quadrature(z2 * linearized_apply(s, z1, kB.mu, kB.alpha, kB.beta)));
  CHECK(b12 == doctest::Approx(half).epsilon(1e-9));
  CHECK(bilinear_form(z1, z1, s, kB.mu, kB.alpha, kB.beta) ==
        doctest::Approx(quadratic_form(z1, s, kB.mu, kB.alpha, kB.beta)).epsilon(1e-9));
}

TEST_CASE("the breather is a critical point of the Lyapunov functional") {
  const GridFunction B = sample_solution(BreatherSolution(kB), 0, kGrid);
  const GridFunction z = bump(0.5, 1.2);
  const std::vector<double> eps{1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
  const CriticalPointReport r = critical_point_expansion(B, kB.mu, {kB.alpha, kB.beta}, z, eps);
  CHECK(r.first_variation < 1e-6 * r.z_norm);
  CHECK(r.slope == doctest::Approx(3.0).epsilon(0.1 / 3));
  const CriticalPointReport bad =
      critical_point_expansion(0.8 * B, kB.mu, {kB.alpha, kB.beta}, z, eps);
  CHECK(bad.first_variation > 1e-2 * bad.z_norm);
  CHECK_THROWS_AS(critical_point_expansion(B, kB.mu, {kB.alpha, kB.beta}, z, {1e-2}),
                  InvalidParameter);
}
