#pragma once

#include <vector>

#include "ghl/closedform.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/numerics.hpp"

namespace ghl {

/// Weights of the Lyapunov combination: 2(beta^2 - alpha^2) on E and
/// (alpha^2 + beta^2)^2 on M.
struct SpectralCoefficients {
  double alpha = 1;
  double beta = 1;
  double energy_weight() const { return 2 * (beta * beta - alpha * alpha); }
  double mass_weight() const {
    const double s = alpha * alpha + beta * beta;
    return s * s;
  }
  void validate() const;
};

double mass(const GridFunction& f);
double energy(const GridFunction& f, double mu);
double higher_energy(const GridFunction& f, double mu);
double lyapunov(const GridFunction& f, double mu, const SpectralCoefficients& w);

/// A pointwise residual with the scale it should be compared against.
struct Residual {
  GridFunction field;
  double scale = 1;  // see each producer
  double inf() const { return field.max_abs(); }
  double l2() const { return field.l2(); }
  double relative() const { return inf() / scale; }
};

/// Fourth-order universal ODE evaluated on B, B_x, ..., B_4x (stack order >= 4).
/// scale = max(1, largest individual term in sup norm).
Residual universal_ode_residual(const DerivativeStack& B, double mu, double alpha, double beta);

enum class SolitonDispersion { linear_c, squared_c };

/// Q'' - kappa Q + 6 mu Q^2 + 2 Q^3 with kappa = c^2 (default) or c.
/// scale = max(1, largest term).
Residual soliton_ode_residual(const DerivativeStack& Q, double c, double mu,
                              SolitonDispersion d = SolitonDispersion::squared_c);

/// (H^2 + N_x^2 - N_xx N + 2 mu H N) / N^2 at one point.
double miura_point(const BreatherParams& p, double t, double x);
/// Same sampled on a grid; scale = 1.
Residual miura_residual(const BreatherParams& p, double t, const Grid& g);
/// u^2 + 2 mu u - (log N)_xx for an arbitrary field u, with N taken from the
/// breather p at time t. Vanishes iff u is that breather.
Residual miura_field_residual(const GridFunction& u, const BreatherParams& p, double t);

enum class DerivativeMode { analytic, spectral };

/// u_t - F(u). scale = sup |u_t|. Analytic mode uses the exact derivative
/// stack of the closed form; spectral mode differentiates samples with FFTs
/// (reliable only up to about 7 derivatives at double precision).
Residual pde_residual(const HierarchyEquation& eqn, const ClosedForm& u, double t, const Grid& g,
                      double mu, DerivativeMode mode = DerivativeMode::analytic);

/// z_4x + p z_xx - p_x z_x + r z with
/// p = 20 mu B + 10 B^2 - 2(beta^2 - alpha^2),
/// r = -10 B_x^2 + 120 mu^2 B^2 + 120 mu B^3 + 30 B^4
///     - 2(beta^2 - alpha^2)(12 mu B + 6 B^2) + (alpha^2 + beta^2)^2.
/// B stack order >= 2 (B_xx is used by the symmetric bilinear form).
GridFunction linearized_apply(const DerivativeStack& B, const GridFunction& z, double mu,
                              double alpha, double beta);

/// int z L z
double quadratic_form(const GridFunction& z, const DerivativeStack& B, double mu, double alpha,
                      double beta);

/// Symmetric form int z1xx z2xx - p z1x z2x + (p_xx + r) z1 z2, equal to
/// (int z1 L z2 + int z2 L z1) / 2.
double bilinear_form(const GridFunction& z1, const GridFunction& z2, const DerivativeStack& B,
                     double mu, double alpha, double beta);

struct CriticalPointReport {
  std::vector<double> eps;
  std::vector<double> remainder;  // H[B+eps z] - H[B] - eps^2 Q[z] / 2
  double slope = 0;               // least-squares slope of log|remainder| vs log eps
  double first_variation = 0;     // |dH/deps| at 0, Richardson-extrapolated central difference
  double z_norm = 0;              // L2 norm of z
  double quadratic = 0;           // Q[z]
};

/// Expansion of H around the profile B in direction z.
CriticalPointReport critical_point_expansion(const GridFunction& B, double mu,
                                             const SpectralCoefficients& w, const GridFunction& z,
                                             const std::vector<double>& eps_list);

}  // namespace ghl
