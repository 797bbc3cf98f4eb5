#include <doctest.h>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"
#include "ghl/evolve.hpp"

using namespace ghl;

namespace {
EvolveConfig config(int n, double mu) {
  EvolveConfig cfg;
  cfg.eqn = &gardner_rhs(n);
  cfg.mu = mu;
  cfg.grid = Grid(40, 512);
  cfg.T = 0.5;
  cfg.checkpoints = 2;
  return cfg;
}
}  // namespace

TEST_CASE("soliton evolution reproduces the travelling profile") {
  const SolitonSolution s({1.0, 0.2, 1});
  EvolveConfig cfg = config(1, 0.2);
  const GridFunction u0 = sample_solution(s, 0, cfg.grid);
  cfg.dt = 0.05 * stable_dt(cfg, u0);
  const Trajectory tr = evolve(cfg, u0);
  REQUIRE(tr.size() == 3);
  CHECK(tr.back().t == doctest::Approx(0.5));
  CHECK((tr.back().u - sample_solution(s, 0.5, cfg.grid)).max_abs() < 1e-6);
  CHECK(conservation_drift(tr, 0.2, {1.0, 1.0}).max() < 1e-8);
}

TEST_CASE("backward run returns to the initial data") {
  const SolitonSolution s({0.8, 0.0, 2});
  EvolveConfig cfg = config(2, 0.0);
  const GridFunction u0 = sample_solution(s, 0, cfg.grid);
  cfg.dt = 0.1 * stable_dt(cfg, u0);
  const GridFunction mid = evolve(cfg, u0).back().u;
  cfg.backward = true;
  const Trajectory back = evolve(cfg, mid);
  CHECK(back.back().t == doctest::Approx(-0.5));
  CHECK((back.back().u - u0).max_abs() < 1e-6);
}

TEST_CASE("configuration errors") {
  const SolitonSolution s({1.0, 0.0, 1});
  EvolveConfig cfg = config(1, 0.0);
  const GridFunction u0 = sample_solution(s, 0, cfg.grid);
  cfg.dt = 10 * stable_dt(cfg, u0);
  CHECK_THROWS_AS(evolve(cfg, u0), StabilityBudgetExceeded);
  cfg.dt = -1;
  CHECK_THROWS_AS(evolve(cfg, u0), InvalidParameter);
  cfg.dt = 1e-3;
  GridFunction nan = u0;
  nan[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(evolve(cfg, nan), BlowUp);
  const GridFunction other(Grid(40, 1024));
  CHECK_THROWS_AS(evolve(cfg, other), GridMismatch);
}
