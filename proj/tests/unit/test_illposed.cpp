#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ghl/error.hpp"
#include "ghl/illposed.hpp"

using namespace ghl;

TEST_CASE("configuration and default time") {
  IllposedConfig cfg;
  cfg.alpha = 20;
  CHECK(cfg.beta() == doctest::Approx(0.05));
  CHECK(cfg.default_time() == doctest::Approx(kIllposedTimeCap));
  cfg.alpha = 1.5;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
}

TEST_CASE("pair construction") {
  IllposedConfig cfg;
  const auto [p1, p2] = construct_pair(cfg);
  CHECK(p1.alpha - p2.alpha == doctest::Approx(cfg.delta_sep / std::pow(cfg.alpha, 2 * cfg.s)));
  CHECK(p1.beta == p2.beta);
  cfg.mu = 50;
  CHECK_THROWS_AS(construct_pair(cfg), DeltaViolation);
}

TEST_CASE("carrier-envelope approximation for small beta/alpha") {
  const BreatherParams p{20, 0.05, 0, 2, 0, 0};
  CHECK(carrier_envelope_error(p, 0) < 5e-3);
}

TEST_CASE("norm separation at alpha = 20") {
  IllposedConfig cfg;
  cfg.alpha = 20;
  const IllposedReport r = run_experiment(cfg);
  CHECK(r.d0 <= 0.5);
  CHECK(r.ratio >= 10);
  CHECK(r.tail < 1e-10);
  CHECK(r.norm1_0 > 0);
  std::ostringstream os;
  write_sweep_csv(os, cfg, {20}, {r});
  CHECK(os.str().rfind("alpha,s,d0,dT,ratio\n", 0) == 0);
}
