#include "ghl/closedform.hpp"

#include <cmath>
#include <string>

#include "ghl/error.hpp"

namespace ghl {

// ------------------------------------------------------------- parameters

void SolitonParams::validate() const {
  if (!(c > 0) || !std::isfinite(c)) throw InvalidParameter("soliton needs c > 0");
  if (!(mu >= 0)) throw InvalidParameter("soliton needs mu >= 0");
  if (n < 1 || n > kMaxHierarchyIndex) throw InvalidParameter("soliton index out of range");
}

double BreatherParams::a1() const {
  return beta * std::sqrt(alpha * alpha + beta * beta) / (alpha * std::sqrt(discriminant()));
}

double BreatherParams::a2() const { return 2 * beta * mu / discriminant(); }

double BreatherParams::a3() const {
  return 2 * beta * mu /
         (alpha * std::sqrt(discriminant()) * std::sqrt(alpha * alpha + beta * beta));
}

void BreatherParams::validate() const {
  if (alpha == 0 || beta == 0) throw InvalidParameter("breather needs alpha != 0 and beta != 0");
  if (!(mu >= 0)) throw InvalidParameter("breather needs mu >= 0");
  if (!(discriminant() >= 1e-10))
    throw InvalidParameter("breather needs alpha^2 + beta^2 - 4 mu^2 >= 1e-10, got " +
                           std::to_string(discriminant()));
  if (n < 1 || n > kMaxHierarchyIndex) throw InvalidParameter("breather index out of range");
}

double PeriodicBreatherParams::period() const { return 4.0 * elliptic_K(k) / alpha; }

void PeriodicBreatherParams::validate() const {
  if (order != 5 && order != 7) throw InvalidParameter("periodic breather order must be 5 or 7");
  if (!(alpha > 0 && beta > 0)) throw InvalidParameter("periodic breather needs alpha, beta > 0");
  if (!(k > 0 && k < 1 && m > 0 && m < 1))
    throw InvalidParameter("periodic breather needs k, m in (0, 1)");
  const double lhs = std::pow(beta / alpha, 4);
  const double rhs = k / (1 - m);
  const double kk = elliptic_K(k);
  const double km = alpha / (2 * beta) * elliptic_K(m);
  if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, rhs) ||
      std::abs(kk - km) > 1e-12 * std::max(1.0, kk))
    throw InvalidParameter("periodic breather parameters violate the commensurability conditions");
}

// ---------------------------------------------------------------- soliton

SolitonSolution::SolitonSolution(const SolitonParams& p) : p_(p) {
  p_.validate();
  speed_ = soliton_speed(p_.n, p_.c, p_.mu);
}

Jet SolitonSolution::profile(int order, double z) const {
  // c^2 / (2 mu + R cosh(c z)), numerator and denominator scaled by exp(-c|z|)
  const double c = p_.c;
  const double r = std::sqrt(4 * p_.mu * p_.mu + c * c);
  const double w = c * z;
  const double sc = std::abs(w);
  Jet ch = (Jet::exp_linear(order, w - sc, c) + Jet::exp_linear(order, -w - sc, -c)) * 0.5;
  Jet num = Jet::exp_linear(order, -sc, 0.0) * (c * c);
  Jet den = Jet::exp_linear(order, -sc, 0.0) * (2 * p_.mu) + ch * r;
  return num / den;
}

std::vector<double> SolitonSolution::x_derivatives(double t, double x, int order) const {
  return profile(order, x - speed_ * t).derivatives();
}

double SolitonSolution::time_derivative(double t, double x) const {
  return -speed_ * profile(1, x - speed_ * t).derivatives()[1];
}

// -------------------------------------------------------------- two-phase

Jet TwoPhaseSolution::directional(int order, double t, double x, double d1, double d2) const {
  const double y1 = x + delta_ * t + x1_;
  const double y2 = x + gamma_ * t + x2_;
  Jet g, f;
  numerator_denominator(order + 1, y1, y2, d1, d2, g, f);
  const Jet n = f * f + g * g;
  if (!(n[0] > 0)) throw DegenerateDenominator("F^2 + G^2 vanished at x = " + std::to_string(x));
  return 2.0 * (g.derivative() * f - g * f.derivative()) / n;
}

std::vector<double> TwoPhaseSolution::x_derivatives(double t, double x, int order) const {
  return directional(order, t, x, 1.0, 1.0).derivatives();
}

double TwoPhaseSolution::time_derivative(double t, double x) const {
  // u = (1,1).grad A, u_t = (delta,gamma).grad u; polarize the Hessian of A
  const double p = directional(1, t, x, 1.0 + delta_, 1.0 + gamma_)[1];
  const double m = directional(1, t, x, 1.0 - delta_, 1.0 - gamma_)[1];
  return 0.25 * (p - m);
}

BreatherSolution::BreatherSolution(const BreatherParams& p)
    : BreatherSolution(p, velocity_pair(p.n, p.alpha, p.beta, p.mu).delta,
                       velocity_pair(p.n, p.alpha, p.beta, p.mu).gamma) {}

BreatherSolution::BreatherSolution(const BreatherParams& p, double delta, double gamma)
    : TwoPhaseSolution(p.alpha, p.beta, delta, gamma, p.x1, p.x2), p_(p) {
  p_.validate();
  a1_ = p_.a1();
  a2_ = p_.a2();
  a3_ = p_.a3();
}

void BreatherSolution::numerator_denominator(int order, double y1, double y2, double d1,
                                             double d2, Jet& g, Jet& f) const {
  const double theta = alpha_ * y1;
  const double phi = beta_ * y2;
  const double sc = std::abs(phi);
  Jet s, c;
  Jet::sin_cos(order, theta, alpha_ * d1, s, c);
  const Jet e = Jet::exp_linear(order, phi - sc, beta_ * d2);
  const Jet em = Jet::exp_linear(order, -phi - sc, -beta_ * d2);
  const double scale = std::exp(-sc);
  const Jet ch = (e + em) * 0.5;
  g = s * (a1_ * scale) - e * a2_;
  f = ch - (c * alpha_ - s * beta_) * (a3_ * scale);
}

PeriodicBreatherSolution::PeriodicBreatherSolution(const PeriodicBreatherParams& p)
    : TwoPhaseSolution(p.alpha, p.beta,
                       periodic_velocities(p.order, p.alpha, p.beta, p.k, p.m).delta,
                       periodic_velocities(p.order, p.alpha, p.beta, p.k, p.m).gamma, p.x1,
                       p.x2),
      p_(p) {
  p_.validate();
}

void PeriodicBreatherSolution::numerator_denominator(int order, double y1, double y2, double d1,
                                                     double d2, Jet& g, Jet& f) const {
  const JacobiJets sn = jacobi_jets(order, alpha_ * y1, alpha_ * d1, p_.k);
  const JacobiJets dn = jacobi_jets(order, beta_ * y2, beta_ * d2, p_.m);
  // G/F = (beta/alpha) sn / nd = (beta/alpha) sn dn
  g = sn.sn * dn.dn * (beta_ / alpha_);
  f = Jet::constant(order, 1.0);
}

// --------------------------------------------------------------- wrappers

double soliton_eval(const SolitonParams& p, double t, double x) {
  return SolitonSolution(p).value(t, x);
}

double breather_eval(const BreatherParams& p, double t, double x) {
  const BreatherComponents c = breather_components(p, t, x);
  if (!(c.N > 0)) throw DegenerateDenominator("N <= 0 in breather_eval");
  return c.H / c.N;
}

double mkdv_breather_eval(double alpha, double beta, int n, double x1, double x2, double t,
                          double x) {
  BreatherParams p{alpha, beta, 0.0, n, x1, x2};
  return BreatherSolution(p).value(t, x);
}

double periodic_breather_eval(const PeriodicBreatherParams& p, double t, double x) {
  return PeriodicBreatherSolution(p).value(t, x);
}

// ------------------------------------------------------------- components

BreatherComponents breather_components(const BreatherParams& p, double t, double x) {
  const VelocityPair v = velocity_pair(p.n, p.alpha, p.beta, p.mu);
  return breather_components(p, v.delta, v.gamma, t, x);
}

BreatherComponents breather_components(const BreatherParams& p, double delta, double gamma,
                                       double t, double x) {
  p.validate();
  const double al = p.alpha, be = p.beta;
  const double a1 = p.a1(), a2 = p.a2(), a3 = p.a3();
  const double th = al * (x + delta * t + p.x1);
  const double ph = be * (x + gamma * t + p.x2);
  const double sc = std::abs(ph);

  // every term is a product of two factors from {1, sin, cos, e^phi, cosh, sinh};
  // each factor carries one power of exp(-|phi|)
  const double one = std::exp(-sc);
  const double S = one * std::sin(th);
  const double C = one * std::cos(th);
  const double E = std::exp(ph - sc);
  const double Em = std::exp(-ph - sc);
  const double ch = 0.5 * (E + Em);
  const double sh = 0.5 * (E - Em);

  const double al2 = al * al, be2 = be * be;
  const double al4 = al2 * al2, be4 = be2 * be2;
  const double K = a1 * a1 - al2 * a3 * a3 + a3 * a3 * be2;
  const double w = al2 + be2;
  const double q = al4 + be4 - 6 * al2 * be2;

  BreatherComponents r{};
  r.log_scale = 2 * sc;
  r.H = 2 * (-a3 * (al2 * a1 * one * one + a2 * (be2 - al2) * E * S - 2 * al * a2 * be * E * C) +
             be * sh * (a2 * E - a1 * S) + ch * (al * a1 * C - a2 * be * E));
  r.N = (a2 * E - a1 * S) * (a2 * E - a1 * S) +
        (ch + a3 * be * S - a3 * al * C) * (ch + a3 * be * S - a3 * al * C);
  r.N_x = 2 * al * K * S * C - 2 * al * a1 * a2 * E * C - 2 * a1 * a2 * be * E * S +
          2 * a2 * a2 * be * E * E + 2 * al2 * a3 * a3 * be * S * S -
          2 * al2 * a3 * a3 * be * C * C + 2 * al2 * a3 * S * ch - 2 * al * a3 * be * C * sh +
          2 * al * a3 * be * C * ch + 2 * a3 * be2 * S * sh + 2 * be * sh * ch;
  r.N_xx = 8 * al2 * al * a3 * a3 * be * S * C - 4 * al * a1 * a2 * be * E * C +
           4 * a2 * a2 * be2 * E * E + 2 * al2 * K * C * C - 2 * al2 * K * S * S -
           2 * a3 * be * (al2 - be2) * S * ch + 4 * al * a3 * be2 * C * sh +
           4 * al2 * a3 * be * S * sh + 2 * be2 * ch * ch + 2 * be2 * sh * sh +
           2 * a1 * a2 * (al2 - be2) * E * S + 2 * al * a3 * (al2 - be2) * C * ch;
  r.N_3x = -8 * al2 * al * K * S * C + 8 * a2 * a2 * be2 * be * E * E +
           2 * a1 * a2 * al * (al2 - 3 * be2) * E * C + 8 * al4 * a3 * a3 * be * C * C -
           8 * al4 * a3 * a3 * be * S * S + 8 * be2 * be * sh * ch -
           2 * al2 * a3 * (al2 - 3 * be2) * S * ch - 2 * be2 * a3 * (3 * al2 - be2) * S * sh +
           2 * a1 * a2 * be * (3 * al2 - be2) * E * S -
           2 * al * a3 * be * (al2 - 3 * be2) * C * ch +
           2 * a3 * al * be * (3 * al2 - be2) * C * sh;
  r.N_4x = -32 * al4 * al * a3 * a3 * be * C * S + 8 * al * a1 * a2 * be * (al2 - be2) * E * C -
           2 * a1 * a2 * q * E * S + 16 * a2 * a2 * be4 * E * E + 8 * be4 * sh * sh +
           8 * al4 * K * S * S + 8 * be4 * ch * ch - 2 * al * a3 * q * C * ch -
           8 * al * a3 * be2 * (al2 - be2) * C * sh - 8 * al4 * K * C * C +
           2 * a3 * be * q * S * ch - 8 * al2 * a3 * (al2 - be2) * S * be * sh;
  r.H_x = 2 * w * (a2 * a3 * al * E * C - a1 * ch * S - a2 * a3 * be * E * S);
  r.H_xx = -2 * w * (al * a1 * ch * C + a1 * be * sh * S + a2 * a3 * w * E * S);
  r.H_3x = 2 * a1 * (al4 - be4) * ch * S - 4 * a1 * al * be * w * sh * C -
           2 * a2 * a3 * be * w * w * E * S - 2 * a2 * a3 * al * w * w * E * C;
  r.H_4x = 2 * a1 * al * (al4 - 2 * al2 * be2 - 3 * be4) * ch * C -
           4 * a2 * a3 * al * be * w * w * E * C +
           2 * a1 * be * (3 * al4 + 2 * al2 * be2 - be4) * sh * S +
           2 * a2 * a3 * (al4 * al2 + al4 * be2 - al2 * be4 - be4 * be2) * E * S;
  return r;
}

// --------------------------------------------------------------- periodic

PeriodicVelocities periodic_velocities(int order, double alpha, double beta, double k, double m) {
  const double a2 = alpha * alpha, b2 = beta * beta;
  const double a4 = a2 * a2, b4 = b2 * b2;
  PeriodicVelocities v;
  if (order == 5) {
    v.delta = -a4 * (k * k - 26 * k + 1) + 10 * a2 * b2 * (1 + k) * (2 - m) -
              5 * b4 * (m * m - 16 * m + 16);
    v.gamma = -b4 * (m * m + 24 * m - 24) + 10 * a2 * b2 * (1 + k) * (2 - m) -
              5 * a4 * (k * k + 14 * k + 1);
  } else if (order == 7) {
    const double a6 = a4 * a2, b6 = b4 * b2;
    const double kc = k * k * k + 135 * k * k + 135 * k + 1;
    v.delta = a6 * kc + 21 * a4 * b2 * (-2 + k * k * (m - 2) + m + 2 * k * (7 * m - 6)) +
              7 * a2 * b4 * (1 + k) * (5 * m * m - 24 * m + 24) +
              7 * b6 * (m * m * m - 2 * m * m + 48 * m - 48);
    v.gamma = -b6 * (-m * m * m - 254 * m * m - 2256 * m + 2512) +
              7 * a2 * b4 * (1 + k) * (3 * m * m + 88 * m - 88) +
              7 * a4 * b2 * (5 * (k * k + 1) * (m - 2) + k * (70 * m + 292)) + 7 * a6 * kc;
  } else {
    throw InvalidParameter("periodic velocities exist for order 5 and 7 only");
  }
  return v;
}

CommensurabilityResult commensurability_solve(double beta, double k) {
  if (!(beta > 0)) throw InvalidParameter("commensurability_solve needs beta > 0");
  if (!(k > 0 && k < 1)) throw InvalidParameter("commensurability_solve needs 0 < k < 1");
  // eliminating alpha = 2 beta K(k)/K(m) leaves (1-m) K(m)^4 = 16 k K(k)^4,
  // whose left side decreases from (pi/2)^4 to 0 on [0, 1)
  const double target = 16 * k * std::pow(elliptic_K(k), 4);
  auto f = [&](double m) { return (1 - m) * std::pow(elliptic_K(m), 4) - target; };
  double lo = 0.0, hi = 1.0;
  if (!(f(lo) > 0))
    throw NoConvergence("no commensurable m in (0, 1) for k = " + std::to_string(k) +
                        " (needs 16 k K(k)^4 < (pi/2)^4)");
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  CommensurabilityResult r;
  r.m = std::abs(f(lo)) <= std::abs(f(hi)) || hi >= 1.0 ? lo : hi;
  if (!(r.m > 0 && r.m < 1)) throw NoConvergence("bisection left the open interval (0, 1)");
  const double Kk = elliptic_K(k);
  const double Km = elliptic_K(r.m);
  r.alpha = 2 * beta * Kk / Km;
  r.L = 4 * Kk / r.alpha;
  r.ratio_residual = std::abs(std::pow(beta / r.alpha, 4) - k / (1 - r.m));
  r.K_residual = std::abs(Kk - r.alpha / (2 * beta) * Km);
  r.period_residual = std::abs(r.L - 2 * Km / beta);
  if (r.ratio_residual > 1e-12 || r.K_residual > 1e-12 || r.period_residual > 1e-12)
    throw NoConvergence("commensurability residuals above 1e-12 (ratio " +
                        std::to_string(r.ratio_residual) + ")");
  return r;
}

PeriodicBreatherParams make_periodic_params(double beta, double k, int order, double x1,
                                            double x2) {
  const CommensurabilityResult c = commensurability_solve(beta, k);
  PeriodicBreatherParams p{c.alpha, beta, k, c.m, x1, x2, order};
  p.validate();
  return p;
}

}  // namespace ghl
