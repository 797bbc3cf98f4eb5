#include "ghl/illposed.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include "ghl/error.hpp"

namespace ghl {

double IllposedConfig::beta() const { return std::pow(alpha, -2 * s); }

void IllposedConfig::validate() const {
  if (n < 1 || n > kMaxHierarchyIndex) throw InvalidParameter("illposed: n out of range");
  if (!(s >= 0)) throw InvalidParameter("illposed: s must be nonnegative");
  if (!(alpha > 1)) throw InvalidParameter("illposed: alpha must exceed 1");
  if (!(delta_sep > 0)) throw InvalidParameter("illposed: delta must be positive");
  if (!(mu >= 0)) throw InvalidParameter("illposed: mu must be nonnegative");
  if (!(beta() / alpha < 0.05))
    throw InvalidParameter("illposed: needs beta/alpha < 0.05, got " +
                           std::to_string(beta() / alpha));
}

double IllposedConfig::default_time() const {
  const double t = 10 * std::pow(alpha, 4 * s - 2 * n + 1) / delta_sep;
  return std::min(t, kIllposedTimeCap);
}

std::pair<BreatherParams, BreatherParams> construct_pair(const IllposedConfig& cfg) {
  cfg.validate();
  const double b = cfg.beta();
  const double shift = cfg.delta_sep / (2 * std::pow(cfg.alpha, 2 * cfg.s));
  BreatherParams p1{cfg.alpha + shift, b, cfg.mu, cfg.n, 0, 0};
  BreatherParams p2{cfg.alpha - shift, b, cfg.mu, cfg.n, 0, 0};
  for (const auto* p : {&p1, &p2})
    if (!(p->discriminant() > 0))
      throw DeltaViolation("alpha^2 + beta^2 - 4 mu^2 <= 0 for alpha = " + std::to_string(p->alpha));
  return {p1, p2};
}

namespace {

constexpr int kMaxPoints = 1 << 23;
constexpr double kTailWidths = 50;  // box margin in units of 1/beta

int box_points(double half_width, double alpha) {
  // at least six points per carrier wavelength
  const double h = std::numbers::pi / (3 * alpha);
  const double need = 2 * half_width / h;
  int n = 16;
  while (n < need && n < kMaxPoints) n *= 2;
  if (n < need) throw GridTooSmall("box would need more than 2^23 points");
  return n;
}

GridFunction sample_shifted(const ClosedForm& u, double t, const Grid& g, double centre) {
  GridFunction r(g);
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.npoints; ++i) {
    try {
      r[i] = u.value(t, centre + g.x(i));
    } catch (...) {
#pragma omp critical(ghl_illposed_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return r;
}

double edge_ratio(const GridFunction& f) {
  const int n = f.size();
  const int band = std::max(1, n / 100);
  double edge = 0;
  for (int i = 0; i < band; ++i) edge = std::max({edge, std::abs(f[i]), std::abs(f[n - 1 - i])});
  const double peak = f.max_abs();
  return peak > 0 ? edge / peak : 0.0;
}

}  // namespace

IllposedReport run_experiment(const IllposedConfig& cfg) {
  const auto [p1, p2] = construct_pair(cfg);
  const BreatherSolution b1(p1), b2(p2);
  IllposedReport r;
  r.T = cfg.time();
  r.beta = cfg.beta();

  const double c1 = -b1.gamma() * r.T;
  const double c2 = -b2.gamma() * r.T;
  r.separation = std::abs(c1 - c2);
  r.separation_in_widths = r.separation * r.beta;

  const double margin = kTailWidths / r.beta;
  const double a_max = std::max(p1.alpha, p2.alpha);
  const Grid g0(margin, box_points(margin, a_max));
  const Grid gT(r.separation / 2 + margin, box_points(r.separation / 2 + margin, a_max));
  r.npoints_0 = g0.npoints;
  r.npoints_T = gT.npoints;

  const GridFunction u10 = sample_shifted(b1, 0.0, g0, 0.0);
  const GridFunction u20 = sample_shifted(b2, 0.0, g0, 0.0);
  const GridFunction u1T = sample_shifted(b1, r.T, gT, 0.5 * (c1 + c2));
  const GridFunction u2T = sample_shifted(b2, r.T, gT, 0.5 * (c1 + c2));
  r.tail = std::max({edge_ratio(u10), edge_ratio(u20), edge_ratio(u1T), edge_ratio(u2T)});
  if (r.tail > 1e-10)
    throw GridTooSmall("breather tails reach the box edge (relative " + std::to_string(r.tail) + ")");

  r.norm1_0 = sobolev_norm(u10, cfg.s);
  r.norm2_0 = sobolev_norm(u20, cfg.s);
  r.norm1_T = sobolev_norm(u1T, cfg.s);
  r.norm2_T = sobolev_norm(u2T, cfg.s);
  r.d0 = sobolev_norm(u10 - u20, cfg.s);
  r.dT = sobolev_norm(u1T - u2T, cfg.s);
  r.ratio = r.d0 > 0 ? r.dT / r.d0 : 0.0;
  return r;
}

double carrier_envelope_error(const BreatherParams& p, double t) {
  const BreatherSolution b(p);
  const double margin = 30 / std::abs(p.beta);
  const Grid g(margin, box_points(margin, std::abs(p.alpha)));
  const double centre = -b.gamma() * t;
  double diff = 0, peak = 0;
  for (int i = 0; i < g.npoints; ++i) {
    const double x = centre + g.x(i);
    const double v = b.value(t, x);
    const double y1 = x + b.delta() * t + p.x1;
    const double y2 = x + b.gamma() * t + p.x2;
    const double approx = 2 * p.beta * std::cos(p.alpha * y1) / std::cosh(p.beta * y2);
    diff = std::max(diff, std::abs(v - approx));
    peak = std::max(peak, std::abs(v));
  }
  return diff / peak;
}

std::vector<IllposedReport> sweep(const IllposedConfig& base, const std::vector<double>& alphas) {
  std::vector<IllposedReport> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    IllposedConfig c = base;
    c.alpha = a;
    out.push_back(run_experiment(c));
  }
  return out;
}

void write_sweep_csv(std::ostream& os, const IllposedConfig& base, const std::vector<double>& alphas,
                     const std::vector<IllposedReport>& reports) {
  const auto old = os.precision(17);
  os << "alpha,s,d0,dT,ratio\n";
  for (std::size_t k = 0; k < reports.size(); ++k)
    os << alphas[k] << "," << base.s << "," << reports[k].d0 << "," << reports[k].dT << ","
       << reports[k].ratio << "\n";
  os.precision(old);
}

}  // namespace ghl
