#include <doctest.h>

#include <cmath>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"

using namespace ghl;

TEST_CASE("jets: arithmetic and derivatives") {
  Jet s, c;
  Jet::sin_cos(4, 0.3, 2.0, s, c);
  const Jet one = s * s + c * c;
  CHECK(one.value() == doctest::Approx(1.0));
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(one[k]) < 1e-14);
  const Jet e = Jet::exp_linear(3, 0.0, 1.0);
  const Jet q = e / e;
  CHECK(q.value() == doctest::Approx(1.0));
  CHECK(std::abs(q[2]) < 1e-14);
  CHECK(e.derivatives()[3] == doctest::Approx(1.0));
  CHECK_THROWS_AS(e / Jet::linear(3, 0.0, 1.0), DegenerateDenominator);
}

TEST_CASE("soliton profile") {
  const SolitonSolution s({1.0, 0.0, 1});
  CHECK(s.value(0, 0) == doctest::Approx(1.0));
  const SolitonSolution g({1.5, 0.4, 1});
  CHECK(g.value(0, 0) == doctest::Approx(2.25 / (0.8 + std::sqrt(0.64 + 2.25))));
  CHECK(s.value(0, 3) < s.value(0, 0));
  CHECK(s.value(0, 3) == doctest::Approx(s.value(0, -3)));
}

TEST_CASE("x-derivatives match finite differences") {
  const BreatherParams p{1.0, 0.8, 0.2, 2, 0.3, -0.4};
  const BreatherSolution b(p);
  const double t = 0.2, x = 0.7, h = 1e-4;
  const auto d = b.x_derivatives(t, x, 2);
  CHECK(d[1] == doctest::Approx((b.value(t, x + h) - b.value(t, x - h)) / (2 * h)).epsilon(1e-6));
  CHECK(d[2] == doctest::Approx((b.value(t, x + h) - 2 * d[0] + b.value(t, x - h)) / (h * h))
                     .epsilon(1e-5));
  const double ut = (b.value(t + h, x) - b.value(t - h, x)) / (2 * h);
  CHECK(b.time_derivative(t, x) == doctest::Approx(ut).epsilon(1e-6));
}

TEST_CASE("component formulas reproduce the arctan form") {
  const BreatherParams p{1.1, 0.7, 0.25, 3, 0.1, 0.2};
  const BreatherSolution b(p);
  for (double x : {-6.0, -1.0, 0.0, 2.5, 9.0}) {
    CHECK(breather_eval(p, 0.3, x) == doctest::Approx(b.value(0.3, x)).epsilon(1e-12));
    const BreatherComponents c = breather_components(p, 0.3, x);
    CHECK(c.N > 0);
  }
}

TEST_CASE("breather validation") {
  BreatherParams bad{0.1, 0.1, 1.0, 1, 0, 0};
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
  BreatherParams zero{0.0, 1.0, 0.0, 1, 0, 0};
  CHECK_THROWS_AS(zero.validate(), InvalidParameter);
}

TEST_CASE("periodic breather: period and velocities") {
  const PeriodicBreatherParams p = make_periodic_params(1.0, 1.0 / 17, 5);
  const PeriodicBreatherSolution s(p);
  CHECK(s.period() == doctest::Approx(4 * elliptic_K(1.0 / 17) / 2.0));
  CHECK(s.value(0.1, 0.3) == doctest::Approx(s.value(0.1, 0.3 + s.period())).epsilon(1e-10));
  const PeriodicVelocities v = periodic_velocities(5, 1, 1, 0, 0);
  CHECK(v.delta == doctest::Approx(-61));
  CHECK(v.gamma == doctest::Approx(39));
  for (int order : {5, 7}) {
    const PeriodicVelocities d = periodic_velocities(order, 1.3, 0.7, 0, 1);
    const VelocityPair w = velocity_pair((order - 1) / 2, 1.3, 0.7, 0);
    CHECK(d.delta == doctest::Approx(w.delta).epsilon(1e-14));
    CHECK(d.gamma == doctest::Approx(w.gamma).epsilon(1e-14));
  }
}
