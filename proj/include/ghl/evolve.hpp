#pragma once

#include <vector>

#include "ghl/functionals.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/numerics.hpp"

namespace ghl {

/// Stability factor for RK4 on the imaginary axis (the exact bound is 2*sqrt(2)).
inline constexpr double kRk4ImaginaryBound = 2.8;

struct EvolveConfig {
  const HierarchyEquation* eqn = nullptr;
  double mu = 0;
  Grid grid;
  double dt = 1e-3;
  double T = 1;
  bool dealias = true;
  int checkpoints = 10;   // snapshots every T / checkpoints
  bool backward = false;  // integrate u_t = -F instead (time reversal)

  void validate() const;
};

/// Spectral radius of the linearized nonlinear part at u0 (sup norms of u0's
/// derivatives times the largest resolved |xi|^j). dt * rho must stay below
/// kRk4ImaginaryBound.
double nonlinear_spectral_radius(const EvolveConfig& cfg, const GridFunction& u0);

/// Largest dt (with a 0.7 safety factor) that meets the budget for u0.
double stable_dt(const EvolveConfig& cfg, const GridFunction& u0);

struct Checkpoint {
  double t;
  GridFunction u;
};

using Trajectory = std::vector<Checkpoint>;

/// Integrating-factor RK4: the constant-coefficient linear part is propagated
/// exactly in Fourier space. Throws StabilityBudgetExceeded before stepping
/// and BlowUp on non-finite values.
Trajectory evolve(const EvolveConfig& cfg, const GridFunction& u0);

struct DriftReport {
  double mass = 0;
  double energy = 0;
  double higher_energy = 0;
  double lyapunov = 0;
  double max() const;
};

/// Max relative drift of M, E, F, H over the checkpoints (absolute when the
/// initial value is zero).
DriftReport conservation_drift(const Trajectory& traj, double mu, const SpectralCoefficients& w);

}  // namespace ghl
