#include "ghl/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "ghl/closedform.hpp"
#include "ghl/elliptic.hpp"
#include "ghl/error.hpp"
#include "ghl/evolve.hpp"
#include "ghl/functionals.hpp"
#include "ghl/golden.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/illposed.hpp"

namespace ghl {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string sci(double v, int digits = 3) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << v;
  return os.str();
}

BreatherParams breather_of(const VerifyParams& p) {
  BreatherParams b{p.alpha, p.beta, p.mu, p.n, 0, 0};
  b.validate();
  return b;
}

const HierarchyEquation& equation_of(const VerifyParams& p) {
  if (p.kind == "mkdv-breather") return mkdv_rhs(p.n);
  if (p.kind == "periodic") return mkdv_rhs((p.order - 1) / 2);
  return gardner_rhs(p.n);
}

// Smooth localized direction with random shape.
GridFunction random_direction(const Grid& g, Rng& rng) {
  const double a0 = uniform(rng, -1, 1), a1 = uniform(rng, -1, 1), a2 = uniform(rng, -0.3, 0.3);
  const double c = uniform(rng, -3, 3), w = uniform(rng, 1, 3);
  return GridFunction::sample(g, [=](double x) {
    const double y = x - c;
    return (a0 + a1 * y + a2 * y * y) * std::exp(-y * y / (2 * w * w));
  });
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i)
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return out;
}

// Breather sampled at time t, re-centred on its envelope so decay at the box
// edges is kept for any velocity.
GridFunction centred_sample(const BreatherSolution& sol, double t, const Grid& g) {
  const double shift = sol.gamma() * t;
  return GridFunction::sample(g, [&](double x) { return sol.value(t, x - shift); });
}

struct Invariants {
  double m, e, f, h;
};

Invariants invariants(const GridFunction& u, double mu, const SpectralCoefficients& w) {
  return {mass(u), energy(u, mu), higher_energy(u, mu), lyapunov(u, mu, w)};
}

double rel_change(double now, double ref) {
  return ref == 0 ? std::abs(now) : std::abs(now - ref) / std::abs(ref);
}

}  // namespace

// ------------------------------------------------------------------ verify

json VerifyParams::to_json() const {
  json j;
  j["kind"] = kind;
  j["n"] = n;
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["mu"] = mu;
  j["c"] = c;
  j["k"] = k;
  j["order"] = order;
  j["t"] = t;
  j["L"] = L;
  j["N"] = N;
  j["seed"] = seed;
  return j;
}

VerifyParams VerifyParams::from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameter("params must be a JSON object");
  VerifyParams p;
  for (const auto& [key, v] : j.items()) {
    if (key == "kind") p.kind = v.get<std::string>();
    else if (key == "n") p.n = v.get<int>();
    else if (key == "alpha") p.alpha = v.get<double>();
    else if (key == "beta") p.beta = v.get<double>();
    else if (key == "mu") p.mu = v.get<double>();
    else if (key == "c") p.c = v.get<double>();
    else if (key == "k") p.k = v.get<double>();
    else if (key == "order") p.order = v.get<int>();
    else if (key == "t") p.t = v.get<double>();
    else if (key == "L") p.L = v.get<double>();
    else if (key == "N") p.N = v.get<int>();
    else if (key == "seed") p.seed = v.get<std::uint64_t>();
    else throw InvalidParameter("unknown parameter '" + key + "'");
  }
  return p;
}

VerificationReport verify_pde(const VerifyParams& p) {
  VerificationReport r;
  r.test = "pde";
  r.params = p.to_json();
  r.tolerance = 1e-6;
  const HierarchyEquation& eqn = equation_of(p);
  Residual res;
  if (p.kind == "soliton") {
    SolitonParams sp{p.c, p.mu, p.n};
    sp.validate();
    res = pde_residual(eqn, SolitonSolution(sp), p.t, Grid(p.L, p.N), p.mu);
  } else if (p.kind == "breather" || p.kind == "mkdv-breather") {
    VerifyParams q = p;
    if (p.kind == "mkdv-breather") q.mu = 0;
    res = pde_residual(eqn, BreatherSolution(breather_of(q)), p.t, Grid(p.L, p.N), q.mu);
  } else if (p.kind == "periodic") {
    const PeriodicBreatherParams pp = make_periodic_params(p.beta, p.k, p.order);
    const PeriodicBreatherSolution sol(pp);
    res = pde_residual(eqn, sol, p.t, Grid(pp.period() / 2, p.N), 0.0);
    r.extra["alpha"] = pp.alpha;
    r.extra["m"] = pp.m;
    r.extra["period"] = pp.period();
  } else {
    throw InvalidParameter("unknown solution kind '" + p.kind + "'");
  }
  r.residual_inf = res.relative();
  r.residual_l2 = res.l2() / res.scale;
  r.extra["scale"] = res.scale;
  r.pass = r.residual_inf < r.tolerance;
  return r;
}

VerificationReport verify_ode(const VerifyParams& p) {
  VerificationReport r;
  r.test = "ode";
  r.params = p.to_json();
  r.tolerance = 1e-7;
  const BreatherSolution sol(breather_of(p));
  const DerivativeStack s = analytic_stack(sol, p.t, Grid(p.L, p.N), 4);
  const Residual res = universal_ode_residual(s, p.mu, p.alpha, p.beta);
  r.residual_inf = res.relative();
  r.residual_l2 = res.l2() / res.scale;
  r.extra["scale"] = res.scale;
  r.pass = r.residual_inf < r.tolerance;
  return r;
}

VerificationReport verify_miura(const VerifyParams& p) {
  VerificationReport r;
  r.test = "miura";
  r.params = p.to_json();
  r.tolerance = 1e-9;
  const BreatherParams b = breather_of(p);
  Rng rng(p.seed);
  constexpr int kPoints = 1000;
  double worst = 0, sq = 0;
  for (int i = 0; i < kPoints; ++i) {
    const double t = uniform(rng, -1, 1);
    const double x = uniform(rng, -p.L / 2, p.L / 2);
    const double v = std::abs(miura_point(b, t, x));
    worst = std::max(worst, v);
    sq += v * v;
  }
  r.residual_inf = worst;
  r.residual_l2 = std::sqrt(sq / kPoints);
  r.extra["points"] = kPoints;
  r.pass = r.residual_inf < r.tolerance;
  return r;
}

VerificationReport verify_conserved(const VerifyParams& p) {
  VerificationReport r;
  r.test = "conserved";
  r.params = p.to_json();
  r.tolerance = 1e-8;
  const BreatherSolution sol(breather_of(p));
  const Grid g(p.L, p.N);
  const SpectralCoefficients w{p.alpha, p.beta};
  const Invariants ref = invariants(centred_sample(sol, p.t, g), p.mu, w);
  double worst = 0, sq = 0;
  json drifts = json::array();
  for (double dt : {0.25, 0.5, 0.75, 1.0}) {
    const Invariants now = invariants(centred_sample(sol, p.t + dt, g), p.mu, w);
    const double d[4] = {rel_change(now.m, ref.m), rel_change(now.e, ref.e),
                         rel_change(now.f, ref.f), rel_change(now.h, ref.h)};
    for (double v : d) {
      worst = std::max(worst, v);
      sq += v * v;
    }
    drifts.push_back({{"t", p.t + dt}, {"M", d[0]}, {"E", d[1]}, {"F", d[2]}, {"H", d[3]}});
  }
  r.residual_inf = worst;
  r.residual_l2 = std::sqrt(sq / 16);
  r.extra["initial"] = {{"M", ref.m}, {"E", ref.e}, {"F", ref.f}, {"H", ref.h}};
  r.extra["drift"] = drifts;
  r.pass = r.residual_inf < r.tolerance;
  return r;
}

VerificationReport verify_critical_point(const VerifyParams& p) {
  VerificationReport r;
  r.test = "critical-point";
  r.params = p.to_json();
  r.tolerance = 1e-6;
  const BreatherSolution sol(breather_of(p));
  const Grid g(p.L, p.N);
  const GridFunction B = sample_solution(sol, p.t, g);
  const SpectralCoefficients w{p.alpha, p.beta};
  const std::vector<double> eps = log_spaced(1e-3, 1e-1, 9);
  Rng rng(p.seed);
  double worst = 0, sq = 0, slope_dev = 0;
  json dirs = json::array();
  for (int d = 0; d < 5; ++d) {
    const GridFunction z = random_direction(g, rng);
    const CriticalPointReport cp = critical_point_expansion(B, p.mu, w, z, eps);
    const double fv = cp.first_variation / cp.z_norm;
    worst = std::max(worst, fv);
    sq += fv * fv;
    slope_dev = std::max(slope_dev, std::abs(cp.slope - 3));
    dirs.push_back({{"first_variation", cp.first_variation},
                    {"z_norm", cp.z_norm},
                    {"slope", cp.slope},
                    {"quadratic", cp.quadratic}});
  }
  r.residual_inf = worst;
  r.residual_l2 = std::sqrt(sq / 5);
  r.extra["directions"] = dirs;
  r.extra["slope_tolerance"] = 0.1;
  r.extra["max_slope_deviation"] = slope_dev;
  r.pass = r.residual_inf < r.tolerance && slope_dev <= 0.1;
  return r;
}

VerificationReport verify(const std::string& test, const VerifyParams& p) {
  if (test == "pde") return verify_pde(p);
  if (test == "ode") return verify_ode(p);
  if (test == "miura") return verify_miura(p);
  if (test == "conserved") return verify_conserved(p);
  if (test == "critical-point") return verify_critical_point(p);
  throw InvalidParameter("unknown verification '" + test + "'");
}

// ---------------------------------------------------------------- criteria

std::string CriterionResult::line() const {
  std::ostringstream os;
  os << "criterion " << std::setw(2) << id << (pass ? "  PASS  " : "  FAIL  ") << title << ": "
     << summary << " [" << std::fixed << std::setprecision(1) << seconds << " s]";
  return os.str();
}

namespace {

DiffPoly transport_term(const HierarchyEquation& e) {
  return DiffPoly::monomial(DiffMonomial::mu(2 * e.n) * DiffMonomial::variable(1),
                            Coeff(e.transport));
}

CriterionResult criterion_hierarchy() {
  CriterionResult c;
  c.title = "hierarchy generation";
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::string> documented;
  json entries = json::array();

  auto compare = [&](const std::string& file, bool must_match) {
    for (const GoldenEntry& e : load_golden(golden_dir() + "/" + file)) {
      const std::string var = e.get("var", "u");
      DiffPoly got;
      if (e.name.size() == 2 && e.name[0] == 'L') {
        got = lenard(e.name[1] - '0');
      } else {
        const int n = std::stoi(e.get("n"));
        const HierarchyEquation& q = e.name.rfind("mkdv", 0) == 0 ? mkdv_rhs(n) : gardner_rhs(n);
        got = q.flux_form();
        if (e.get("transport") == "included") got += transport_term(q);
      }
      const auto diff = term_diff(e.poly(), got, var);
      entries.push_back({{"entry", e.name}, {"file", file}, {"diff", diff}});
      if (!diff.empty()) {
        if (must_match) ok = false;
        documented.push_back(e.name + " (" + std::to_string(diff.size()) + " terms)");
      }
    }
  };
  compare("lenard_1_4.txt", true);
  compare("gardner_3.txt", true);
  compare("gardner_5.txt", true);
  compare("gardner_7.txt", true);
  compare("mkdv_9.txt", true);
  compare("mkdv_11.txt", true);
  compare("gardner_11.txt", true);
  compare("mkdv_13.txt", false);
  compare("gardner_9.txt", false);
  compare("lenard_5_printed.txt", false);

  // The printed 9th-order Gardner listing is arbitrated by the PDE residual of
  // an exact breather: the generated flow must satisfy it and the printed one
  // must not (whenever they differ).
  const HierarchyEquation& gen = gardner_rhs(4);
  const GoldenEntry printed_entry = load_golden(golden_dir() + "/gardner_9.txt").front();
  HierarchyEquation printed = gen;
  printed.rhs = -(printed_entry.poly() - transport_term(gen));
  const BreatherParams bp{0.9, 0.8, 0.3, 4, 0.4, -0.2};
  const BreatherSolution sol(bp);
  const Grid g(40, 2048);
  const double res_gen = pde_residual(gen, sol, 0.3, g, bp.mu).relative();
  const double res_printed = pde_residual(printed, sol, 0.3, g, bp.mu).relative();
  const bool printed_differs = !(printed.rhs == gen.rhs);
  const bool arbitrated = res_gen < 1e-6 && (!printed_differs || res_printed > 1e-3);
  ok = ok && arbitrated;

  // lenard(5): weight 10 and the defining recursion.
  const DiffPoly& l4 = lenard(4);
  const DiffPoly& l5 = lenard(5);
  const DiffPoly v = DiffPoly::var(0), vx = DiffPoly::var(1);
  const DiffPoly dl4 = total_derivative(l4);
  const DiffPoly rhs = total_derivative(total_derivative(dl4)) + Coeff(4) * v * dl4 +
                       Coeff(2) * vx * l4;
  const bool l5_weight = weight_check(l5, 2, 10);
  const bool l5_recursion = total_derivative(l5) == rhs;
  ok = ok && l5_weight && l5_recursion;

  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && c.seconds < 30;
  c.pass = ok;
  std::ostringstream os;
  os << "L1-L4, Gardner n=1..3, mKdV n=4,5, Gardner n=5 exact; L5 weight "
     << (l5_weight ? "ok" : "BAD") << ", recursion " << (l5_recursion ? "ok" : "BAD")
     << "; documented diffs: ";
  for (std::size_t i = 0; i < documented.size(); ++i) os << (i ? ", " : "") << documented[i];
  os << "; Gardner n=4 residual generated " << sci(res_gen) << " vs printed " << sci(res_printed);
  c.summary = os.str();
  c.details["entries"] = entries;
  c.details["gardner4_residual_generated"] = res_gen;
  c.details["gardner4_residual_printed"] = res_printed;
  c.details["lenard5_weight"] = l5_weight;
  c.details["lenard5_recursion"] = l5_recursion;
  return c;
}

// Printed closed forms of the 9th and 11th order Gardner breather velocities.
struct PrintedVelocities {
  double d9, g9, d11, g11;
};

PrintedVelocities printed_velocities(double a, double b, double m) {
  const double a2 = a * a, b2 = b * b, m2 = m * m;
  const double a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4, a10 = a8 * a2;
  const double b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, b10 = b8 * b2;
  const double m4 = m2 * m2, m6 = m4 * m2, m8 = m4 * m4, m10 = m8 * m2;
  PrintedVelocities p{};
  p.d9 = a * (a8 - 18 * a6 * (2 * b2 + m2) + 126 * a4 * (b4 + 3 * b2 * m2 + m4) -
              42 * a2 * (2 * b6 + 15 * b4 * m2 + 30 * b2 * m4 + 10 * m6) +
              9 * (b8 + 14 * b6 * m2 + 70 * b4 * m4 + 140 * b2 * m6 + 70 * m8));
  p.g9 = -b * (9 * a8 - 42 * a6 * (2 * b2 + 3 * m2) + 126 * a4 * (b4 + 5 * b2 * m2 + 5 * m4) -
               18 * a2 * (2 * b6 + 21 * b4 * m2 + 70 * b2 * m4 + 70 * m6) + b8 + 18 * b6 * m2 +
               126 * b4 * m4 + 420 * b2 * m6 + 630 * m8);
  p.d11 = a * (a10 - 11 * a8 * (5 * b2 + 2 * m2) + 66 * a6 * (5 * b4 + 12 * b2 * m2 + 3 * m4) -
               462 * a4 * (b6 + 6 * b4 * m2 + 9 * b2 * m4 + 2 * m6) +
               33 * a2 * (5 * b8 + 56 * b6 * m2 + 210 * b4 * m4 + 280 * b2 * m6 + 70 * m8) -
               11 * (b10 + 18 * b8 * m2 + 126 * b6 * m4 + 420 * b4 * m6 + 630 * b2 * m8 +
                     252 * m10));
  p.g11 = -b * (-11 * a10 + 33 * a8 * (5 * b2 + 6 * m2) - 462 * a6 * (b4 + 4 * b2 * m2 + 3 * m4) +
                66 * a4 * (5 * b6 + 42 * b4 * m2 + 105 * b2 * m4 + 70 * m6) -
                11 * a2 * (5 * b8 + 72 * b6 * m2 + 378 * b4 * m4 + 840 * b2 * m6 + 630 * m8) +
                b10 + 22 * b8 * m2 + 198 * b6 * m4 + 924 * b4 * m6 + 2310 * b2 * m8 +
                2772 * m10);
  return p;
}

double rel_err(double got, double want) {
  const double s = std::max(std::abs(got), std::abs(want));
  return s == 0 ? 0 : std::abs(got - want) / s;
}

CriterionResult criterion_coefficients(const SuiteOptions& opt) {
  CriterionResult c;
  c.title = "coefficient extraction";
  const auto& a2 = gardner_rhs(2).a;
  const auto& a3 = gardner_rhs(3).a;
  const bool a_ok = a2 == std::vector<mpq_class>{10, 1} &&
                    a3 == std::vector<mpq_class>{70, 14, 1};

  Rng rng(opt.seed + 2);
  double worst = 0;
  int sets = 0;
  while (sets < 100) {
    const double al = uniform(rng, 0.3, 2.0), be = uniform(rng, 0.3, 2.0);
    const double mu = uniform(rng, 0.0, 0.8);
    if (!(al * al + be * be - 4 * mu * mu > 0)) continue;
    ++sets;
    const PrintedVelocities pr = printed_velocities(al, be, mu);
    // The printed forms keep the transport term and carry the factors below.
    const VelocityPair v4 = velocity_pair(4, al, be, mu, true);
    const VelocityPair v5 = velocity_pair(5, al, be, mu, true);
    worst = std::max({worst, rel_err(-pr.d9 / al, v4.delta), rel_err(pr.g9 / be, v4.gamma),
                      rel_err(pr.d11 / al, v5.delta), rel_err(pr.g11 / be, v5.gamma)});
  }
  c.pass = a_ok && worst < 1e-12;
  c.summary = std::string("a_{.,2}=[10,1], a_{.,3}=[70,14,1] ") + (a_ok ? "exact" : "MISMATCH") +
              "; n=4,5 velocities over 100 sets, worst relative " + sci(worst) + " (tol 1e-12)";
  c.details["a_exact"] = a_ok;
  c.details["velocity_worst_relative"] = worst;
  return c;
}

CriterionResult criterion_residuals(const SuiteOptions& opt) {
  CriterionResult c;
  c.title = "exact-solution residuals";
  Rng rng(opt.seed + 3);
  double worst_sol = 0, worst_br = 0, worst_per = 0;
  json runs = json::array();
  auto record = [&](const VerificationReport& r, double& worst) {
    worst = std::max(worst, r.residual_inf);
    runs.push_back({{"params", r.params}, {"residual", r.residual_inf}});
  };
  for (int n = 1; n <= 5; ++n)
    for (int set = 0; set < 3; ++set) {
      VerifyParams p;
      p.kind = "soliton";
      p.n = n;
      p.c = uniform(rng, 0.6, 1.5);
      p.mu = uniform(rng, 0.0, 0.5);
      for (double t : {0.0, 0.3}) {
        p.t = t;
        record(verify_pde(p), worst_sol);
      }
    }
  for (int n = 1; n <= 4; ++n)
    for (int set = 0; set < 3; ++set) {
      VerifyParams p;
      p.n = n;
      p.alpha = uniform(rng, 0.6, 1.3);
      p.beta = uniform(rng, 0.5, 1.1);
      p.mu = uniform(rng, 0.0, 0.4);
      for (double t : {0.0, 0.3}) {
        p.t = t;
        record(verify_pde(p), worst_br);
      }
    }
  for (int order : {5, 7}) {
    VerifyParams p;
    p.kind = "periodic";
    p.order = order;
    p.beta = 1;
    p.k = 1.0 / 17;
    p.N = 1024;
    for (double t : {0.0, 0.3}) {
      p.t = t;
      record(verify_pde(p), worst_per);
    }
  }
  c.pass = worst_sol < 1e-6 && worst_br < 1e-6 && worst_per < 1e-6;
  c.summary = "worst relative residual: solitons n=1..5 " + sci(worst_sol) + ", breathers n=1..4 " +
              sci(worst_br) + ", periodic order 5,7 " + sci(worst_per) + " (tol 1e-6)";
  c.details["runs"] = runs;
  return c;
}

CriterionResult criterion_universal_ode() {
  CriterionResult c;
  c.title = "universal fourth-order ODE";
  double worst = 0, worst_mkdv = 0;
  for (int n = 1; n <= 4; ++n) {
    VerifyParams p;
    p.n = n;
    p.alpha = 1.0;
    p.beta = 1.1;
    p.mu = 0.3;
    worst = std::max(worst, verify_ode(p).residual_inf);
    p.mu = 0;
    worst_mkdv = std::max(worst_mkdv, verify_ode(p).residual_inf);
  }
  c.pass = worst < 1e-7 && worst_mkdv < 1e-7;
  c.summary = "(1.0, 1.1, 0.3) n=1..4 worst " + sci(worst) + ", mu=0 worst " + sci(worst_mkdv) +
              " (tol 1e-7 x scale)";
  c.details["worst"] = worst;
  c.details["worst_mu0"] = worst_mkdv;
  return c;
}

CriterionResult criterion_miura(const SuiteOptions& opt) {
  CriterionResult c;
  c.title = "Miura/Hirota identity";
  double worst = 0, weakest_control = 1e300;
  for (int n = 1; n <= 4; ++n) {
    VerifyParams p;
    p.n = n;
    p.seed = opt.seed + 5 + static_cast<std::uint64_t>(n);
    worst = std::max(worst, verify_miura(p).residual_inf);

    // Negative control: perturbed profiles against the same N.
    const BreatherParams b = breather_of(p);
    const Grid g(40, 2048);
    for (double t : {0.0, 0.3}) {
      const GridFunction u = sample_solution(BreatherSolution(b), t, g);
      const GridFunction bump =
          GridFunction::sample(g, [](double x) { return 0.1 / std::cosh(x - 0.5); });
      weakest_control = std::min(weakest_control, miura_field_residual(u + bump, b, t).inf());
      weakest_control = std::min(weakest_control, miura_field_residual(1.05 * u, b, t).inf());
    }
  }
  c.pass = worst < 1e-9 && weakest_control > 1e-2;
  c.summary = "10^3 points x n=1..4 worst " + sci(worst) + " (tol 1e-9); negative control min " +
              sci(weakest_control) + " (> 1e-2)";
  c.details["worst"] = worst;
  c.details["negative_control_min"] = weakest_control;
  return c;
}

struct EvolutionRun {
  int n;
  double error;
  double drift;
  double dt;
  double seconds;
};

EvolutionRun run_evolution(int n, double dt_factor) {
  const auto start = std::chrono::steady_clock::now();
  const BreatherParams bp{1.0, 0.4, 0.1, n, 0, 0};
  const BreatherSolution sol(bp);
  EvolveConfig cfg;
  cfg.eqn = &gardner_rhs(n);
  cfg.mu = bp.mu;
  cfg.grid = Grid(80, 1024);
  cfg.T = 1;
  cfg.checkpoints = 10;
  const GridFunction u0 = sample_solution(sol, 0, cfg.grid);
  cfg.dt = dt_factor * stable_dt(cfg, u0);
  const Trajectory traj = evolve(cfg, u0);
  const GridFunction exact = sample_solution(sol, traj.back().t, cfg.grid);
  EvolutionRun r{};
  r.n = n;
  r.error = (traj.back().u - exact).max_abs();
  r.drift = conservation_drift(traj, bp.mu, {bp.alpha, bp.beta}).max();
  r.dt = cfg.dt;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CriterionResult criterion_conservation() {
  CriterionResult c;
  c.title = "conservation and evolution";
  double worst_exact = 0;
  for (int n = 1; n <= 4; ++n) {
    VerifyParams p;
    p.n = n;
    worst_exact = std::max(worst_exact, verify_conserved(p).residual_inf);
  }
  const EvolutionRun e1 = run_evolution(1, 0.01);
  const EvolutionRun e2 = run_evolution(2, 0.15);
  const bool evo_ok = e1.error < 1e-6 && e2.error < 1e-6 && e1.drift < 1e-8 && e2.drift < 1e-8;
  c.pass = worst_exact < 1e-8 && evo_ok;
  c.summary = "exact breathers n=1..4 drift " + sci(worst_exact) + " (tol 1e-8); evolution n=1 err " +
              sci(e1.error) + " drift " + sci(e1.drift) + ", n=2 err " + sci(e2.error) +
              " drift " + sci(e2.drift) + " (tol 1e-6 / 1e-8)";
  for (const auto& e : {e1, e2})
    c.details["evolution"].push_back(
        {{"n", e.n}, {"error", e.error}, {"drift", e.drift}, {"dt", e.dt}, {"seconds", e.seconds}});
  c.details["exact_drift"] = worst_exact;
  return c;
}

CriterionResult criterion_critical_point(const SuiteOptions& opt) {
  CriterionResult c;
  c.title = "Lyapunov critical point";
  VerifyParams p;
  p.seed = opt.seed + 7;
  const VerificationReport r = verify_critical_point(p);

  // Negative control: a scaled profile is not a critical point.
  const Grid g(p.L, p.N);
  const GridFunction B = 0.8 * sample_solution(BreatherSolution(breather_of(p)), 0, g);
  Rng rng(p.seed);
  double weakest = 1e300;
  for (int d = 0; d < 5; ++d) {
    const GridFunction z = random_direction(g, rng);
    const CriticalPointReport cp = critical_point_expansion(
        B, p.mu, {p.alpha, p.beta}, z, log_spaced(1e-3, 1e-1, 9));
    weakest = std::min(weakest, cp.first_variation / cp.z_norm);
  }
  const double slope_dev = r.extra["max_slope_deviation"].get<double>();
  c.pass = r.pass && weakest > 1e-2;
  c.summary = "5 directions: first variation / |z| " + sci(r.residual_inf) +
              " (tol 1e-6), max |slope - 3| " + sci(slope_dev) +
              " (tol 0.1); negative control min " + sci(weakest);
  c.details["report"] = r.to_json();
  c.details["negative_control_min"] = weakest;
  return c;
}

CriterionResult criterion_illposed() {
  CriterionResult c;
  c.title = "ill-posedness trend";
  IllposedConfig base;
  base.n = 2;
  base.s = 0.5;
  base.delta_sep = 0.1;
  base.mu = 0;
  base.T = kIllposedTimeCap;
  const std::vector<double> alphas{20, 40, 80};
  const auto reps = sweep(base, alphas);
  bool ok = true;
  std::ostringstream os;
  os << "T=" << base.T << ", ratios";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    ok = ok && r.d0 <= 0.5 && r.ratio >= 10;
    if (i > 0) ok = ok && r.ratio >= reps[i - 1].ratio;
    os << (i ? ", " : " ") << std::setprecision(4) << r.ratio << " (d0 " << std::setprecision(3)
       << r.d0 << ")";
    c.details["runs"].push_back({{"alpha", alphas[i]},
                                 {"d0", r.d0},
                                 {"dT", r.dT},
                                 {"ratio", r.ratio},
                                 {"separation_in_widths", r.separation_in_widths},
                                 {"tail", r.tail}});
  }
  os << "; accepted on the monotone trend, the alpha -> infinity limit is not reproduced";
  c.details["note"] =
      "The asymptotic statement is not reproducible as a limit at desk scale; acceptance is the "
      "monotone trend d_T/d_0 >= 10, non-decreasing in alpha, with d_0 <= 0.5.";
  c.pass = ok;
  c.summary = os.str();
  return c;
}

CriterionResult criterion_elliptic() {
  CriterionResult c;
  c.title = "elliptic layer";
  const double k0 = std::abs(elliptic_K(0) - std::numbers::pi / 2);
  double ident = 0, k_vs_std = 0;
  for (double m : {0.0, 0.01, 1.0 / 17, 0.3, 0.5, 0.9, 0.999, 1.0}) {
    for (double u = -6; u <= 6; u += 0.37) {
      const JacobiValues j = jacobi(u, m);
      ident = std::max({ident, std::abs(j.sn * j.sn + j.cn * j.cn - 1),
                        std::abs(j.dn * j.dn + m * j.sn * j.sn - 1), std::abs(j.nd * j.dn - 1)});
    }
    if (m < 1) {
      const long double ref = std::comp_ellint_1(std::sqrt(static_cast<long double>(m)));
      k_vs_std = std::max(k_vs_std, rel_err(elliptic_K(m), static_cast<double>(ref)));
    }
  }
  const CommensurabilityResult cr = commensurability_solve(1.0, 1.0 / 17);
  const double a_err = std::abs(cr.alpha - 2), m_err = std::abs(cr.m - 1.0 / 17);
  const double period_err =
      std::abs(4 * elliptic_K(1.0 / 17) / cr.alpha - 2 * elliptic_K(cr.m) / 1.0);
  c.pass = k0 < 1e-14 && ident < 1e-12 && k_vs_std < 1e-14 && a_err < 1e-12 && m_err < 1e-12 &&
           period_err < 1e-12;
  c.summary = "|K(0)-pi/2| " + sci(k0) + ", identities " + sci(ident) + ", K vs std " +
              sci(k_vs_std) + "; commensurability |alpha-2| " + sci(a_err) + ", |m-1/17| " +
              sci(m_err) + ", periods " + sci(period_err);
  c.details["alpha"] = cr.alpha;
  c.details["m"] = cr.m;
  return c;
}

CriterionResult criterion_degeneration(const SuiteOptions& opt) {
  CriterionResult c;
  c.title = "degeneration chain";
  // Both sides are polynomials of degree <= 7 in each of alpha, beta. On the
  // 10 x 10 dyadic grid below every operation is exact in double precision, so
  // equality there is equality of the polynomials.
  int exact_mismatch = 0;
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      const double a = i / 4.0, b = j / 4.0;
      for (int order : {5, 7}) {
        const PeriodicVelocities pv = periodic_velocities(order, a, b, 0, 1);
        const VelocityPair v = velocity_pair((order - 1) / 2, a, b, 0);
        if (pv.delta != v.delta || pv.gamma != v.gamma) ++exact_mismatch;
      }
    }
  // Random points: errors are measured against (alpha^2 + beta^2)^n, the size
  // of the terms being summed; the pointwise relative error is kept for the
  // record (it grows wherever a velocity is small against its terms).
  Rng rng(opt.seed + 10);
  double worst_v = 0, worst_pointwise = 0;
  for (int set = 0; set < 20; ++set) {
    const double a = uniform(rng, 0.3, 2.0), b = uniform(rng, 0.3, 2.0);
    for (int order : {5, 7}) {
      const int n = (order - 1) / 2;
      const PeriodicVelocities pv = periodic_velocities(order, a, b, 0, 1);
      const VelocityPair v = velocity_pair(n, a, b, 0);
      const double scale = std::pow(a * a + b * b, n);
      worst_v = std::max({worst_v, std::abs(pv.delta - v.delta) / scale,
                          std::abs(pv.gamma - v.gamma) / scale});
      worst_pointwise = std::max(
          {worst_pointwise, rel_err(pv.delta, v.delta), rel_err(pv.gamma, v.gamma)});
    }
  }
  c.details["velocity_pointwise_relative"] = worst_pointwise;
  double worst_limit = 0;
  const Grid g(40, 2048);
  for (int n = 1; n <= 4; ++n) {
    const BreatherParams p{1.0, 1.1, 1e-6, n, 0.3, -0.2};
    for (double t : {0.0, 0.3})
      for (int i = 0; i < g.npoints; ++i) {
        const double x = g.x(i);
        worst_limit = std::max(worst_limit, std::abs(breather_eval(p, t, x) -
                                                     mkdv_breather_eval(p.alpha, p.beta, n, p.x1,
                                                                        p.x2, t, x)));
      }
  }
  c.pass = exact_mismatch == 0 && worst_v < 1e-14 && worst_limit < 1e-4;
  c.summary = "periodic velocities at (k,m)=(0,1): " + std::to_string(exact_mismatch) +
              " mismatches on the exact dyadic grid, random points worst normwise " +
              sci(worst_v) + " (tol 1e-14); mu=1e-6 vs mKdV breather sup diff " +
              sci(worst_limit) + " (tol 1e-4)";
  c.details["exact_grid_mismatches"] = exact_mismatch;
  c.details["velocity_worst_normwise"] = worst_v;
  c.details["mu_limit_sup"] = worst_limit;
  return c;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult c;
  try {
    switch (id) {
      case 1: c = criterion_hierarchy(); break;
      case 2: c = criterion_coefficients(opt); break;
      case 3: c = criterion_residuals(opt); break;
      case 4: c = criterion_universal_ode(); break;
      case 5: c = criterion_miura(opt); break;
      case 6: c = criterion_conservation(); break;
      case 7: c = criterion_critical_point(opt); break;
      case 8: c = criterion_illposed(); break;
      case 9: c = criterion_elliptic(); break;
      case 10: c = criterion_degeneration(opt); break;
      default: throw InvalidParameter("no criterion " + std::to_string(id));
    }
  } catch (const InvalidParameter&) {
    throw;
  } catch (const std::exception& e) {
    c.title = "criterion " + std::to_string(id);
    c.pass = false;
    c.summary = std::string("error: ") + e.what();
  }
  c.id = id;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<CriterionResult> run_suite(const std::vector<int>& ids, const SuiteOptions& opt,
                                       std::ostream* log) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, opt));
    if (log) *log << out.back().line() << std::endl;
  }
  return out;
}

}  // namespace ghl
