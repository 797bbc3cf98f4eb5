#include "ghl/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "ghl/error.hpp"

namespace ghl {

void SpectralCoefficients::validate() const {
  if (alpha == 0 || beta == 0) throw InvalidParameter("spectral coefficients need alpha, beta != 0");
}

double mass(const GridFunction& f) { return 0.5 * quadrature(f * f); }

double energy(const GridFunction& f, double mu) {
  const GridFunction fx = spectral_derivative(f, 1);
  GridFunction dens(f.grid());
  for (int i = 0; i < f.size(); ++i) {
    const double u = f[i];
    dens[i] = 0.5 * fx[i] * fx[i] - 2 * mu * u * u * u - 0.5 * u * u * u * u;
  }
  return quadrature(dens);
}

double higher_energy(const GridFunction& f, double mu) {
  const DerivativeStack s = spectral_stack(f, 2);
  GridFunction dens(f.grid());
  for (int i = 0; i < f.size(); ++i) {
    const double u = s[0][i], ux = s[1][i], uxx = s[2][i];
    const double u2 = u * u;
    dens[i] = 0.5 * uxx * uxx - 10 * mu * u * ux * ux + 10 * mu * mu * u2 * u2 -
              5 * u2 * ux * ux + 6 * mu * u2 * u2 * u + u2 * u2 * u2;
  }
  return quadrature(dens);
}

double lyapunov(const GridFunction& f, double mu, const SpectralCoefficients& w) {
  w.validate();
  return higher_energy(f, mu) + w.energy_weight() * energy(f, mu) + w.mass_weight() * mass(f);
}

namespace {

// Accumulates a sum of term fields and tracks the largest sup norm.
struct TermSum {
  GridFunction total;
  std::vector<double> sup;
  explicit TermSum(const Grid& g) : total(g) {}
  void add(const GridFunction& term) {
    total += term;
    sup.push_back(term.max_abs());
  }
  Residual finish() && {
    double s = 1.0;
    for (double v : sup) s = std::max(s, v);
    return Residual{std::move(total), s};
  }
};

template <class F>
GridFunction pointwise(const Grid& g, F&& f) {
  GridFunction r(g);
  for (int i = 0; i < g.npoints; ++i) r[i] = f(i);
  return r;
}

}  // namespace

Residual universal_ode_residual(const DerivativeStack& B, double mu, double alpha, double beta) {
  if (B.order() < 4) throw InvalidParameter("universal ODE needs derivatives up to order 4");
  const Grid& g = B.grid();
  const double a2 = alpha * alpha, b2 = beta * beta;
  const double ab = a2 - b2;
  const double w = (a2 + b2) * (a2 + b2);
  const GridFunction &b = B[0], &bx = B[1], &bxx = B[2], &b4 = B[4];
  TermSum t(g);
  t.add(b4);
  t.add(pointwise(g, [&](int i) { return 2 * ab * bxx[i]; }));
  t.add(pointwise(g, [&](int i) { return 12 * ab * mu * b[i] * b[i]; }));
  t.add(pointwise(g, [&](int i) { return 4 * ab * b[i] * b[i] * b[i]; }));
  t.add(pointwise(g, [&](int i) { return w * b[i]; }));
  t.add(pointwise(g, [&](int i) { return 10 * b[i] * b[i] * bxx[i]; }));
  t.add(pointwise(g, [&](int i) { return 10 * b[i] * bx[i] * bx[i]; }));
  t.add(pointwise(g, [&](int i) { return 6 * std::pow(b[i], 5); }));
  t.add(pointwise(g, [&](int i) { return 10 * mu * bx[i] * bx[i]; }));
  t.add(pointwise(g, [&](int i) { return 20 * mu * b[i] * bxx[i]; }));
  t.add(pointwise(g, [&](int i) { return 40 * mu * mu * b[i] * b[i] * b[i]; }));
  t.add(pointwise(g, [&](int i) { return 30 * mu * std::pow(b[i], 4); }));
  return std::move(t).finish();
}

Residual soliton_ode_residual(const DerivativeStack& Q, double c, double mu, SolitonDispersion d) {
  if (Q.order() < 2) throw InvalidParameter("soliton ODE needs derivatives up to order 2");
  const Grid& g = Q.grid();
  const double kappa = d == SolitonDispersion::squared_c ? c * c : c;
  const GridFunction& q = Q[0];
  TermSum t(g);
  t.add(Q[2]);
  t.add(pointwise(g, [&](int i) { return -kappa * q[i]; }));
  t.add(pointwise(g, [&](int i) { return 6 * mu * q[i] * q[i]; }));
  t.add(pointwise(g, [&](int i) { return 2 * q[i] * q[i] * q[i]; }));
  return std::move(t).finish();
}

double miura_point(const BreatherParams& p, double t, double x) {
  const BreatherComponents c = breather_components(p, t, x);
  return (c.H * c.H + c.N_x * c.N_x - c.N_xx * c.N + 2 * p.mu * c.H * c.N) / (c.N * c.N);
}

Residual miura_residual(const BreatherParams& p, double t, const Grid& g) {
  GridFunction r(g);
  for (int i = 0; i < g.npoints; ++i) r[i] = miura_point(p, t, g.x(i));
  return Residual{std::move(r), 1.0};
}

Residual miura_field_residual(const GridFunction& u, const BreatherParams& p, double t) {
  const Grid& g = u.grid();
  GridFunction r(g);
  for (int i = 0; i < g.npoints; ++i) {
    const BreatherComponents c = breather_components(p, t, g.x(i));
    const double lognxx = (c.N_xx * c.N - c.N_x * c.N_x) / (c.N * c.N);
    r[i] = u[i] * u[i] + 2 * p.mu * u[i] - lognxx;
  }
  return Residual{std::move(r), 1.0};
}

Residual pde_residual(const HierarchyEquation& eqn, const ClosedForm& u, double t, const Grid& g,
                      double mu, DerivativeMode mode) {
  const int order = eqn.rhs.max_order();
  const DerivativeStack s = mode == DerivativeMode::analytic
                                ? analytic_stack(u, t, g, order)
                                : spectral_stack(sample_solution(u, t, g), order);
  const GridFunction ut = time_derivative(u, t, g);
  GridFunction r = ut - rhs_eval(eqn, s, mu);
  const double scale = std::max(ut.max_abs(), 1e-300);
  return Residual{std::move(r), scale};
}

namespace {

struct OperatorCoefficients {
  GridFunction p, px, pxx, r;
};

OperatorCoefficients coefficients(const DerivativeStack& B, double mu, double alpha, double beta) {
  if (B.order() < 2) throw InvalidParameter("linearized operator needs B up to B_xx");
  const Grid& g = B.grid();
  const double e = beta * beta - alpha * alpha;
  const double w = (alpha * alpha + beta * beta) * (alpha * alpha + beta * beta);
  const GridFunction &b = B[0], &bx = B[1], &bxx = B[2];
  OperatorCoefficients c{GridFunction(g), GridFunction(g), GridFunction(g), GridFunction(g)};
  for (int i = 0; i < g.npoints; ++i) {
    const double u = b[i], ux = bx[i], uxx = bxx[i];
    c.p[i] = 20 * mu * u + 10 * u * u - 2 * e;
    c.px[i] = (20 * mu + 20 * u) * ux;
    c.pxx[i] = (20 * mu + 20 * u) * uxx + 20 * ux * ux;
    c.r[i] = -10 * ux * ux + 120 * mu * mu * u * u + 120 * mu * u * u * u + 30 * u * u * u * u -
             2 * e * (12 * mu * u + 6 * u * u) + w;
  }
  return c;
}

}  // namespace

GridFunction linearized_apply(const DerivativeStack& B, const GridFunction& z, double mu,
                              double alpha, double beta) {
  require_same_grid(B[0], z);
  const OperatorCoefficients c = coefficients(B, mu, alpha, beta);
  const DerivativeStack zs = spectral_stack(z, 4);
  GridFunction out(z.grid());
  for (int i = 0; i < z.size(); ++i)
    out[i] = zs[4][i] + c.p[i] * zs[2][i] - c.px[i] * zs[1][i] + c.r[i] * zs[0][i];
  return out;
}

double quadratic_form(const GridFunction& z, const DerivativeStack& B, double mu, double alpha,
                      double beta) {
  return quadrature(z * linearized_apply(B, z, mu, alpha, beta));
}

double bilinear_form(const GridFunction& z1, const GridFunction& z2, const DerivativeStack& B,
                     double mu, double alpha, double beta) {
  require_same_grid(z1, z2);
  require_same_grid(B[0], z1);
  const OperatorCoefficients c = coefficients(B, mu, alpha, beta);
  const DerivativeStack a = spectral_stack(z1, 2);
  const DerivativeStack b = spectral_stack(z2, 2);
  GridFunction dens(z1.grid());
  for (int i = 0; i < z1.size(); ++i)
    dens[i] = a[2][i] * b[2][i] - c.p[i] * a[1][i] * b[1][i] + (c.pxx[i] + c.r[i]) * a[0][i] * b[0][i];
  return quadrature(dens);
}

CriticalPointReport critical_point_expansion(const GridFunction& B, double mu,
                                             const SpectralCoefficients& w, const GridFunction& z,
                                             const std::vector<double>& eps_list) {
  require_same_grid(B, z);
  if (eps_list.size() < 2) throw InvalidParameter("need at least two eps values");
  CriticalPointReport r;
  const DerivativeStack bs = spectral_stack(B, 2);
  r.quadratic = quadratic_form(z, bs, mu, w.alpha, w.beta);
  r.z_norm = z.l2();
  const double h0 = lyapunov(B, mu, w);
  auto shifted = [&](double e) { return lyapunov(B + e * z, mu, w); };

  for (double e : eps_list) {
    if (!(e > 0)) throw InvalidParameter("eps values must be positive");
    r.eps.push_back(e);
    r.remainder.push_back(shifted(e) - h0 - 0.5 * e * e * r.quadratic);
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(r.eps.size());
  for (std::size_t k = 0; k < r.eps.size(); ++k) {
    const double lx = std::log(r.eps[k]);
    const double ly = std::log(std::abs(r.remainder[k]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  const double e = *std::min_element(r.eps.begin(), r.eps.end());
  const double d1 = (shifted(e) - shifted(-e)) / (2 * e);
  const double d2 = (shifted(e / 2) - shifted(-e / 2)) / e;
  r.first_variation = std::abs((4 * d2 - d1) / 3);
  return r;
}

}  // namespace ghl
