#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ghl/elliptic.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/jet.hpp"

namespace ghl {

struct SolitonParams {
  double c = 1;
  double mu = 0;
  int n = 1;
  void validate() const;
};

struct BreatherParams {
  double alpha = 1;
  double beta = 1;
  double mu = 0;
  int n = 1;
  double x1 = 0;
  double x2 = 0;

  double discriminant() const { return alpha * alpha + beta * beta - 4 * mu * mu; }
  double a1() const;
  double a2() const;
  double a3() const;
  /// Throws InvalidParameter unless alpha, beta != 0, mu >= 0 and Delta >= 1e-10.
  void validate() const;
};

struct PeriodicBreatherParams {
  double alpha = 2;
  double beta = 1;
  double k = 0;
  double m = 0;
  double x1 = 0;
  double x2 = 0;
  int order = 5;

  double period() const;  // 4 K(k) / alpha
  /// Checks both commensurability conditions (1e-12 relative) and order in {5, 7}.
  void validate() const;
};

/// A closed-form solution u(t, x) with exact x- and t-derivatives.
class ClosedForm {
 public:
  virtual ~ClosedForm() = default;

  /// [u, u_x, ..., u_{order x}] at (t, x)
  virtual std::vector<double> x_derivatives(double t, double x, int order) const = 0;
  virtual double time_derivative(double t, double x) const = 0;
  virtual double value(double t, double x) const { return x_derivatives(t, x, 0)[0]; }
  /// Spatial period, 0 for decaying solutions.
  virtual double period() const { return 0.0; }
  virtual std::string kind() const = 0;
};

class SolitonSolution final : public ClosedForm {
 public:
  explicit SolitonSolution(const SolitonParams& p);
  std::vector<double> x_derivatives(double t, double x, int order) const override;
  double time_derivative(double t, double x) const override;
  std::string kind() const override { return "soliton"; }
  double speed() const { return speed_; }

 private:
  Jet profile(int order, double z) const;
  SolitonParams p_;
  double speed_;
};

/// Common machinery for u = 2 d/dx arctan(G/F) with G, F functions of the two
/// phases theta = alpha*y1, phi = beta*y2, y1 = x + delta t + x1,
/// y2 = x + gamma t + x2.
class TwoPhaseSolution : public ClosedForm {
 public:
  std::vector<double> x_derivatives(double t, double x, int order) const override;
  double time_derivative(double t, double x) const override;
  double delta() const { return delta_; }
  double gamma() const { return gamma_; }

 protected:
  TwoPhaseSolution(double alpha, double beta, double delta, double gamma, double x1, double x2)
      : alpha_(alpha), beta_(beta), delta_(delta), gamma_(gamma), x1_(x1), x2_(x2) {}
  /// Jets of G and F (up to a common positive factor) at
  /// (y1 + d1 h, y2 + d2 h).
  virtual void numerator_denominator(int order, double y1, double y2, double d1, double d2,
                                     Jet& g, Jet& f) const = 0;

  double alpha_, beta_, delta_, gamma_, x1_, x2_;

 private:
  Jet directional(int order, double t, double x, double d1, double d2) const;
};

class BreatherSolution final : public TwoPhaseSolution {
 public:
  /// Velocities from velocity_pair(p.n, alpha, beta, mu).
  explicit BreatherSolution(const BreatherParams& p);
  BreatherSolution(const BreatherParams& p, double delta, double gamma);
  std::string kind() const override { return p_.mu == 0 ? "mkdv-breather" : "breather"; }
  const BreatherParams& params() const { return p_; }

 protected:
  void numerator_denominator(int order, double y1, double y2, double d1, double d2, Jet& g,
                             Jet& f) const override;

 private:
  BreatherParams p_;
  double a1_, a2_, a3_;
};

class PeriodicBreatherSolution final : public TwoPhaseSolution {
 public:
  explicit PeriodicBreatherSolution(const PeriodicBreatherParams& p);
  std::string kind() const override { return "periodic"; }
  double period() const override { return p_.period(); }
  const PeriodicBreatherParams& params() const { return p_; }

 protected:
  void numerator_denominator(int order, double y1, double y2, double d1, double d2, Jet& g,
                             Jet& f) const override;

 private:
  PeriodicBreatherParams p_;
};

double soliton_eval(const SolitonParams& p, double t, double x);
double breather_eval(const BreatherParams& p, double t, double x);
double mkdv_breather_eval(double alpha, double beta, int n, double x1, double x2, double t,
                          double x);
double periodic_breather_eval(const PeriodicBreatherParams& p, double t, double x);

/// H, N and their x-derivatives evaluated from the explicit component
/// formulas. All ten are multiplied by the common factor exp(-2|phi|)
/// (phi = beta*y2) so they stay finite far out; ratios such as H/N and the
/// Miura combination divided by N^2 are unaffected.
struct BreatherComponents {
  double H, N, N_x, N_xx, H_x, H_xx, H_3x, H_4x, N_3x, N_4x;
  double log_scale;  // 2|phi|; multiply by exp(log_scale) for the raw values
};

BreatherComponents breather_components(const BreatherParams& p, double t, double x);
/// Same with explicit velocities (e.g. for the mKdV breather).
BreatherComponents breather_components(const BreatherParams& p, double delta, double gamma,
                                       double t, double x);

struct PeriodicVelocities {
  double delta = 0;
  double gamma = 0;
};

PeriodicVelocities periodic_velocities(int order, double alpha, double beta, double k, double m);

struct CommensurabilityResult {
  double alpha = 0;
  double m = 0;
  double L = 0;
  double ratio_residual = 0;   // |beta^4/alpha^4 - k/(1-m)|
  double K_residual = 0;       // |K(k) - alpha/(2 beta) K(m)|
  double period_residual = 0;  // |4K(k)/alpha - 2K(m)/beta|
};

/// Solves beta^4/alpha^4 = k/(1-m), K(k) = alpha/(2 beta) K(m) for (alpha, m)
/// by bisection on m. NoConvergence when no root is bracketed in (0, 1).
CommensurabilityResult commensurability_solve(double beta, double k);

PeriodicBreatherParams make_periodic_params(double beta, double k, int order, double x1 = 0,
                                            double x2 = 0);

}  // namespace ghl
