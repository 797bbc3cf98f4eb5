#include "ghl/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "ghl/error.hpp"
#include "ghl/kernels.hpp"

namespace ghl {
namespace {

using Spectrum = std::vector<std::complex<double>>;

struct Split {
  DiffPoly linear;
  DiffPoly nonlinear;
};

Split split(const DiffPoly& rhs) {
  Split s;
  for (const auto& [m, c] : rhs.terms()) {
    if (m.is_linear())
      s.linear.add_term(m, c);
    else
      s.nonlinear.add_term(m, c);
  }
  return s;
}

int resolved_max_bin(const EvolveConfig& cfg) {
  const int half = cfg.grid.npoints / 2;
  return cfg.dealias ? cfg.grid.npoints / 3 : half;
}

}  // namespace

void EvolveConfig::validate() const {
  if (eqn == nullptr) throw InvalidParameter("evolve needs an equation");
  if (!(dt > 0) || !(T > 0)) throw InvalidParameter("evolve needs dt > 0 and T > 0");
  if (checkpoints < 1) throw InvalidParameter("need at least one checkpoint");
  if (!(mu >= 0)) throw InvalidParameter("evolve needs mu >= 0");
}

double nonlinear_spectral_radius(const EvolveConfig& cfg, const GridFunction& u0) {
  cfg.validate();
  const CompiledPoly nl = compile(split(cfg.eqn->rhs).nonlinear, cfg.mu);
  if (nl.terms.empty()) return 0.0;
  const DerivativeStack s = spectral_stack(u0, std::max(nl.max_order, 0));
  std::vector<double> sup;
  for (const auto& d : s.d) sup.push_back(d.max_abs());
  const double xi = cfg.grid.wavenumber(resolved_max_bin(cfg));
  double rho = 0;
  for (const auto& t : nl.terms) {
    for (const auto& [j, e] : t.exps) {
      double v = std::abs(t.coef) * e * std::pow(sup[static_cast<std::size_t>(j)], e - 1) *
                 std::pow(xi, j);
      for (const auto& [k, f] : t.exps)
        if (k != j) v *= std::pow(sup[static_cast<std::size_t>(k)], f);
      rho += v;
    }
  }
  return rho;
}

double stable_dt(const EvolveConfig& cfg, const GridFunction& u0) {
  const double rho = nonlinear_spectral_radius(cfg, u0);
  return rho > 0 ? 0.7 * kRk4ImaginaryBound / rho : cfg.T / cfg.checkpoints;
}

Trajectory evolve(const EvolveConfig& cfg, const GridFunction& u0) {
  cfg.validate();
  if (!(u0.grid() == cfg.grid)) throw GridMismatch("initial data is not on the configured grid");
  if (!u0.all_finite()) throw BlowUp("initial data is not finite");

  const Grid& g = cfg.grid;
  const int n = g.npoints;
  const int bins = n / 2 + 1;
  const double sign = cfg.backward ? -1.0 : 1.0;

  const int steps_per_chunk = std::max(
      1, static_cast<int>(std::ceil(cfg.T / cfg.checkpoints / cfg.dt - 1e-9)));
  const double dt = cfg.T / cfg.checkpoints / steps_per_chunk;

  const double rho = nonlinear_spectral_radius(cfg, u0);
  if (dt * rho > kRk4ImaginaryBound)
    throw StabilityBudgetExceeded("dt * rho = " + std::to_string(dt * rho) + " exceeds " +
                                  std::to_string(kRk4ImaginaryBound) +
                                  "; reduce dt below " + std::to_string(kRk4ImaginaryBound / rho));

  const Split parts = split(cfg.eqn->rhs);
  const CompiledPoly nl = compile(parts.nonlinear, cfg.mu);
  const int nl_order = std::max(nl.max_order, 0);

  // Lambda(xi) = sum c mu^p (i xi)^j over the linear monomials
  Spectrum lambda(static_cast<std::size_t>(bins), 0.0);
  std::vector<double> mask(static_cast<std::size_t>(bins), 1.0);
  for (int k = 0; k < bins; ++k) {
    const std::complex<double> ik(0.0, g.wavenumber(k));
    std::complex<double> l = 0.0;
    for (const auto& [m, c] : parts.linear.terms()) {
      const int j = m.top_order();
      std::complex<double> sym = std::pow(ik, j);
      if (k == n / 2 && j % 2 == 1) sym = 0.0;
      l += c.re().get_d() * std::pow(cfg.mu, m.mu_power) * sym;
    }
    lambda[static_cast<std::size_t>(k)] = sign * l;
    if (cfg.dealias && k > n / 3) mask[static_cast<std::size_t>(k)] = 0.0;
  }
  Spectrum half(static_cast<std::size_t>(bins)), full(static_cast<std::size_t>(bins));
  for (int k = 0; k < bins; ++k) {
    half[static_cast<std::size_t>(k)] = std::exp(lambda[static_cast<std::size_t>(k)] * (0.5 * dt));
    full[static_cast<std::size_t>(k)] = std::exp(lambda[static_cast<std::size_t>(k)] * dt);
  }

  auto nonlinear = [&](const Spectrum& uh) {
    Spectrum out(static_cast<std::size_t>(bins), 0.0);
    if (nl.terms.empty()) return out;
    DerivativeStack s;
    for (int j = 0; j <= nl_order; ++j) {
      Spectrum d = uh;
      for (int k = 0; k < bins; ++k) {
        std::complex<double> sym = std::pow(std::complex<double>(0.0, g.wavenumber(k)), j);
        if (k == n / 2 && j % 2 == 1) sym = 0.0;
        d[static_cast<std::size_t>(k)] *= sym;
      }
      s.d.push_back(inverse_fft(g, d));
    }
    std::vector<double> vals;
    eval_poly_parallel(nl, s, vals);
    out = forward_fft(GridFunction(g, std::move(vals)));
    for (int k = 0; k < bins; ++k) out[static_cast<std::size_t>(k)] *= sign * mask[static_cast<std::size_t>(k)];
    return out;
  };

  Trajectory traj;
  traj.push_back({0.0, u0});
  Spectrum u = forward_fft(u0);
  Spectrum tmp(static_cast<std::size_t>(bins));
  double t = 0;
  for (int chunk = 1; chunk <= cfg.checkpoints; ++chunk) {
    for (int step = 0; step < steps_per_chunk; ++step) {
      const Spectrum k1 = nonlinear(u);
      for (int k = 0; k < bins; ++k) {
        const auto i = static_cast<std::size_t>(k);
        tmp[i] = half[i] * (u[i] + 0.5 * dt * k1[i]);
      }
      const Spectrum k2 = nonlinear(tmp);
      for (int k = 0; k < bins; ++k) {
        const auto i = static_cast<std::size_t>(k);
        tmp[i] = half[i] * u[i] + 0.5 * dt * k2[i];
      }
      const Spectrum k3 = nonlinear(tmp);
      for (int k = 0; k < bins; ++k) {
        const auto i = static_cast<std::size_t>(k);
        tmp[i] = full[i] * u[i] + dt * half[i] * k3[i];
      }
      const Spectrum k4 = nonlinear(tmp);
      for (int k = 0; k < bins; ++k) {
        const auto i = static_cast<std::size_t>(k);
        u[i] = full[i] * u[i] +
               dt / 6.0 * (full[i] * k1[i] + 2.0 * half[i] * (k2[i] + k3[i]) + k4[i]);
      }
    }
    t = cfg.T * chunk / cfg.checkpoints;
    GridFunction snap = inverse_fft(g, u);
    if (!snap.all_finite())
      throw BlowUp("non-finite values at t = " + std::to_string(t));
    traj.push_back({cfg.backward ? -t : t, std::move(snap)});
  }
  return traj;
}

double DriftReport::max() const { return std::max({mass, energy, higher_energy, lyapunov}); }

DriftReport conservation_drift(const Trajectory& traj, double mu, const SpectralCoefficients& w) {
  DriftReport r;
  if (traj.empty()) return r;
  auto drift = [&](auto&& q) {
    const double q0 = q(traj.front().u);
    double d = 0;
    for (const auto& c : traj) d = std::max(d, std::abs(q(c.u) - q0));
    return q0 != 0 ? d / std::abs(q0) : d;
  };
  r.mass = drift([](const GridFunction& u) { return mass(u); });
  r.energy = drift([&](const GridFunction& u) { return energy(u, mu); });
  r.higher_energy = drift([&](const GridFunction& u) { return higher_energy(u, mu); });
  r.lyapunov = drift([&](const GridFunction& u) { return lyapunov(u, mu, w); });
  return r;
}

}  // namespace ghl
