#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/kernels.hpp"
#include "ghl/numerics.hpp"

using namespace ghl;

TEST_CASE("grid layout") {
  const Grid g(10, 64);
  CHECK(g.x(0) == -10);
  CHECK(g.spacing() == doctest::Approx(20.0 / 64));
  CHECK(g.wavenumber(1) == doctest::Approx(std::numbers::pi / 10));
  CHECK_THROWS_AS(Grid(10, 100), InvalidParameter);
  CHECK_THROWS_AS(Grid(-1, 64), InvalidParameter);
}

TEST_CASE("FFT round trip and spectral derivatives") {
  const Grid g(std::numbers::pi, 64);
  const GridFunction f = GridFunction::sample(g, [](double x) { return std::sin(3 * x) + 0.5; });
  const GridFunction back = inverse_fft(g, forward_fft(f));
  CHECK((back - f).max_abs() < 1e-14);
  const GridFunction d = spectral_derivative(f, 1);
  const GridFunction want = GridFunction::sample(g, [](double x) { return 3 * std::cos(3 * x); });
  CHECK((d - want).max_abs() < 1e-12);
  const GridFunction d3 = spectral_derivative(f, 3);
  CHECK((d3 + 9 * want).max_abs() < 1e-10);
}

TEST_CASE("quadrature and Sobolev norm of a pure mode") {
  const Grid g(std::numbers::pi, 128);
  const GridFunction f = GridFunction::sample(g, [](double x) { return std::cos(2 * x); });
  CHECK(quadrature(f * f) == doctest::Approx(std::numbers::pi));
  CHECK(sobolev_norm(f, 0) == doctest::Approx(f.l2()));
  CHECK(sobolev_norm(f, 1) == doctest::Approx(std::sqrt(5.0) * f.l2()));
}

TEST_CASE("grid mismatch is rejected") {
  const GridFunction a(Grid(10, 64)), b(Grid(10, 128));
  CHECK_THROWS_AS(a + b, GridMismatch);
}

TEST_CASE("analytic and spectral stacks agree for a resolved soliton") {
  const SolitonSolution s({1.0, 0.2, 1});
  const Grid g(30, 1024);
  const DerivativeStack a = analytic_stack(s, 0.1, g, 3);
  const DerivativeStack b = spectral_stack(a[0], 3);
  for (int j = 0; j <= 3; ++j) CHECK((a[j] - b[j]).max_abs() < 1e-9);
}

TEST_CASE("serial and parallel kernels agree") {
  const BreatherSolution b({1.0, 0.9, 0.2, 2, 0, 0});
  const Grid g(20, 512);
  std::vector<std::vector<double>> s1, s2;
  sample_serial(b, 0.1, g, 5, s1);
  sample_parallel(b, 0.1, g, 5, s2);
  CHECK(s1 == s2);
  const DerivativeStack st = analytic_stack(b, 0.1, g, 5);
  const CompiledPoly p = compile(gardner_rhs(2).rhs, 0.2);
  std::vector<double> o1, o2;
  eval_poly_serial(p, st, o1);
  eval_poly_parallel(p, st, o2);
  CHECK(o1 == o2);
  CHECK(thread_count() >= 1);
}

TEST_CASE("CSV has a header and full precision") {
  const GridFunction f(Grid(1, 16), 1.0 / 3);
  std::ostringstream os;
  write_csv(os, f);
  CHECK(os.str().rfind("x,u\n-1,0.33333333333333331\n", 0) == 0);
}
