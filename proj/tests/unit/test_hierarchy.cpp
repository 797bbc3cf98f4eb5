#include <doctest.h>

#include <cmath>

#include "ghl/error.hpp"
#include "ghl/golden.hpp"
#include "ghl/hierarchy.hpp"

using namespace ghl;

TEST_CASE("Lenard operators from the recursion") {
  CHECK(lenard(0) == DiffPoly(Coeff::rational(1, 2)));
  CHECK(lenard(1) == parse_diffpoly("v", "v"));
  CHECK(lenard(2) == parse_diffpoly("vxx + 3*v^2", "v"));
  for (int n = 1; n <= 6; ++n) CHECK(weight_check(lenard(n), 2, 2 * n));
}

TEST_CASE("golden Lenard file matches") {
  for (const auto& e : load_golden(golden_dir() + "/lenard_1_4.txt"))
    CHECK_MESSAGE(term_diff(e.poly(), lenard(e.name[1] - '0'), "v").empty(), e.name);
}

TEST_CASE("Gardner flows: weights, leading term, coefficients") {
  for (int n = 1; n <= 6; ++n) {
    const HierarchyEquation& e = gardner_rhs(n);
    CHECK(e.order() == 2 * n + 1);
    CHECK(weight_check(e.rhs, 1, 2 * n + 2));
    CHECK(coefficient_of(e.flux_form(), DiffMonomial::variable(2 * n + 1)) == Coeff(1));
    CHECK(e.a.back() == 1);
    CHECK(is_real(e.rhs));
  }
  CHECK(gardner_rhs(2).a == std::vector<mpq_class>{10, 1});
  CHECK(gardner_rhs(3).a == std::vector<mpq_class>{70, 14, 1});
  CHECK(gardner_rhs(1).transport == 6);
  CHECK(gardner_rhs(2).transport == 30);
  CHECK(gardner_rhs(3).transport == 140);
}

TEST_CASE("the 5th-order Gardner flux in canonical text") {
  CHECK(gardner_rhs(2).flux_form().to_string() ==
        "+u5x +10*mu^2*u3x +20*mu*u*u3x +40*mu*ux*uxx +10*u^2*u3x +40*u*ux*uxx +10*ux^3 "
        "+120*mu^3*u*ux +180*mu^2*u^2*ux +120*mu*u^3*ux +30*u^4*ux");
}

TEST_CASE("mKdV member drops mu") {
  const HierarchyEquation& m = mkdv_rhs(3);
  CHECK(m.rhs.max_mu_power() == 0);
  CHECK(m.rhs == gardner_rhs(3).rhs.drop_mu());
}

TEST_CASE("flows are conservation laws") {
  for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(formal_integral(gardner_rhs(n).rhs));
}

TEST_CASE("index range") {
  CHECK_THROWS_AS(gardner_rhs(0), InvalidParameter);
  CHECK_THROWS_AS(gardner_rhs(kMaxHierarchyIndex + 1), InvalidParameter);
}

TEST_CASE("velocity pair") {
  const VelocityPair v = velocity_pair(1, 1.0, 1.0, 0.0);
  // S = (beta + i alpha)^3 with alpha = beta = 1: -2 + 2i
  CHECK(v.delta == doctest::Approx(-2.0));
  CHECK(v.gamma == doctest::Approx(2.0));
  const VelocityPair t = velocity_pair(1, 0.7, 1.3, 0.2, true);
  CHECK(t.delta == doctest::Approx(0.49 - 3 * 1.69 - 6 * 0.04));
  CHECK(soliton_speed(2, 1.5, 0.0) == doctest::Approx(std::pow(1.5, 4)));
}

TEST_CASE("5th-order velocities against the expanded closed form") {
  for (double a : {0.4, 1.0, 1.7})
    for (double b : {0.3, 0.9, 1.4})
      for (double m : {0.0, 0.2, 0.5}) {
        const VelocityPair v = velocity_pair(2, a, b, m);
        const double a2 = a * a, b2 = b * b, m2 = m * m;
        const double d5 = -a2 * a2 + 10 * a2 * b2 - 5 * b2 * b2 - 10 * m2 * (3 * b2 - a2);
        const double g5 = -b2 * b2 + 10 * a2 * b2 - 5 * a2 * a2 - 10 * m2 * (b2 - 3 * a2);
        CHECK(v.delta == doctest::Approx(d5).epsilon(1e-13));
        CHECK(v.gamma == doctest::Approx(g5).epsilon(1e-13));
      }
  CHECK_THROWS_AS(velocity_pair(2, 0.0, 1.0, 0.0), ZeroParameter);
  CHECK_THROWS_AS(velocity_pair(2, 1.0, 0.0, 0.0), ZeroParameter);
}
