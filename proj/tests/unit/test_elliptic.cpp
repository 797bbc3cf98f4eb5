#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ghl/closedform.hpp"
#include "ghl/elliptic.hpp"
#include "ghl/error.hpp"

using namespace ghl;

TEST_CASE("complete elliptic integral") {
  CHECK(std::abs(elliptic_K(0) - std::numbers::pi / 2) < 1e-15);
  CHECK(elliptic_K(0.5) == doctest::Approx(1.854074677301372).epsilon(1e-15));
  for (double m : {0.01, 1.0 / 17, 0.3, 0.9, 0.99})
    CHECK(elliptic_K(m) == doctest::Approx(std::comp_ellint_1(std::sqrt(m))).epsilon(1e-14));
  CHECK_THROWS_AS(elliptic_K(1.0), DomainError);
  CHECK_THROWS_AS(elliptic_K(-0.1), DomainError);
}

TEST_CASE("Jacobi functions: identities and special values") {
  for (double m : {0.0, 0.2, 0.7, 0.99, 1.0})
    for (double u = -5; u <= 5; u += 0.45) {
      const JacobiValues j = jacobi(u, m);
      CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1) < 1e-13);
      CHECK(std::abs(j.dn * j.dn + m * j.sn * j.sn - 1) < 1e-13);
      CHECK(std::abs(j.nd * j.dn - 1) < 1e-13);
    }
  const double m = 0.3;
  const JacobiValues q = jacobi(elliptic_K(m), m);
  CHECK(q.sn == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(q.cn) < 1e-12);
  CHECK(q.dn == doctest::Approx(std::sqrt(1 - m)).epsilon(1e-13));
  CHECK_THROWS_AS(jacobi(0.1, 1.5), DomainError);
}

TEST_CASE("Jacobi jets agree with finite differences") {
  const double m = 0.4, u0 = 0.8, rate = 1.3, h = 1e-5;
  const JacobiJets jj = jacobi_jets(3, u0, rate, m);
  const double fd = (jacobi(u0 + rate * h, m).sn - jacobi(u0 - rate * h, m).sn) / (2 * h);
  CHECK(jj.sn.derivatives()[1] == doctest::Approx(fd).epsilon(1e-8));
  CHECK(jj.dn.value() == doctest::Approx(jacobi(u0, m).dn).epsilon(1e-14));
}

TEST_CASE("commensurability") {
  const CommensurabilityResult r = commensurability_solve(1.0, 1.0 / 17);
  CHECK(std::abs(r.alpha - 2) < 1e-12);
  CHECK(std::abs(r.m - 1.0 / 17) < 1e-12);
  CHECK(r.period_residual < 1e-12);
  CHECK_THROWS_AS(commensurability_solve(1.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(commensurability_solve(1.0, 1.0), InvalidParameter);
}
