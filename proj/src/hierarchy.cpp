#include "ghl/hierarchy.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <string>

#include "ghl/error.hpp"

namespace ghl {
namespace {

std::mutex g_memo_mutex;
std::vector<std::unique_ptr<DiffPoly>> g_lenard;
std::array<std::unique_ptr<HierarchyEquation>, kMaxHierarchyIndex + 1> g_gardner;
std::array<std::unique_ptr<HierarchyEquation>, kMaxHierarchyIndex + 1> g_mkdv;

void check_index(int n) {
  if (n < 1 || n > kMaxHierarchyIndex)
    throw InvalidParameter("hierarchy index must be in [1, " +
                           std::to_string(kMaxHierarchyIndex) + "], got " + std::to_string(n));
}

DiffPoly lenard_step(const DiffPoly& l) {
  const DiffPoly v = DiffPoly::var(0);
  const DiffPoly lx = total_derivative(l);
  const DiffPoly l3x = total_derivative(total_derivative(lx));
  return formal_integral(l3x + DiffPoly(4) * v * lx + DiffPoly(2) * total_derivative(v) * l);
}

const DiffPoly& lenard_locked(int n) {
  if (g_lenard.empty()) g_lenard.push_back(std::make_unique<DiffPoly>(Coeff::rational(1, 2)));
  while (static_cast<int>(g_lenard.size()) <= n)
    g_lenard.push_back(std::make_unique<DiffPoly>(lenard_step(*g_lenard.back())));
  return *g_lenard[static_cast<std::size_t>(n)];
}

HierarchyEquation build_gardner(int n) {
  const DiffPoly u = DiffPoly::var(0);
  const DiffPoly ux = DiffPoly::var(1);
  const DiffPoly shifted = DiffPoly::mu() + u;
  const DiffPoly arg = DiffPoly(Coeff::i()) * ux + shifted * shifted;

  DiffPoly w;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    w = substitute_argument(lenard_locked(n), arg);
  }
  const DiffPoly inner = DiffPoly(-Coeff::i()) * total_derivative(w) + DiffPoly(2) * shifted * w;
  DiffPoly rhs = -total_derivative(inner);

  if (!is_real(rhs))
    throw RealnessViolation("gardner_rhs(" + std::to_string(n) + ") has imaginary terms");
  if (!weight_check(rhs, 1, 2 * n + 2))
    throw RealnessViolation("gardner_rhs(" + std::to_string(n) + ") is not weight homogeneous");

  HierarchyEquation eq;
  eq.n = n;
  DiffMonomial transport = DiffMonomial::mu(2 * n) * DiffMonomial::variable(1);
  eq.transport = -coefficient_of(rhs, transport).re();
  rhs.add_term(transport, -coefficient_of(rhs, transport));

  // any remaining constant-coefficient u_x-type term other than the dispersive
  // ones would mean the frame convention is wrong
  for (const auto& [m, c] : rhs.terms()) {
    if (!m.is_linear()) continue;
    const int j = m.top_order();
    if (j % 2 == 0 || j < 3)
      throw RealnessViolation("unexpected linear term " + m.to_string() + " in gardner_rhs(" +
                              std::to_string(n) + ")");
  }

  for (int p = 1; p <= n; ++p) {
    DiffMonomial m = DiffMonomial::mu(2 * (n - p)) * DiffMonomial::variable(2 * p + 1);
    eq.a.push_back(-coefficient_of(rhs, m).re());
  }
  if (eq.a.back() != 1) throw RealnessViolation("leading dispersion coefficient is not 1");
  eq.rhs = std::move(rhs);
  return eq;
}

}  // namespace

const DiffPoly& lenard(int n) {
  if (n < 0) throw InvalidParameter("lenard index must be nonnegative");
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  return lenard_locked(n);
}

const HierarchyEquation& gardner_rhs(int n) {
  check_index(n);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    if (g_gardner[n]) return *g_gardner[n];
  }
  auto eq = std::make_unique<HierarchyEquation>(build_gardner(n));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  if (!g_gardner[n]) g_gardner[n] = std::move(eq);
  return *g_gardner[n];
}

const HierarchyEquation& mkdv_rhs(int n) {
  check_index(n);
  const HierarchyEquation& g = gardner_rhs(n);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  if (!g_mkdv[n]) {
    auto eq = std::make_unique<HierarchyEquation>(g);
    eq->mkdv = true;
    eq->rhs = g.rhs.drop_mu();
    g_mkdv[n] = std::move(eq);
  }
  return *g_mkdv[n];
}

VelocityPair velocity_pair(int n, double alpha, double beta, double mu, bool include_transport) {
  if (alpha == 0 || beta == 0) throw ZeroParameter("velocity_pair needs alpha != 0 and beta != 0");
  const HierarchyEquation& eq = gardner_rhs(n);
  // Powers by repeated multiplication, so dyadic inputs give exact results.
  const std::complex<double> z(beta, alpha);
  const std::complex<double> z2 = z * z;
  std::vector<double> mu2(static_cast<std::size_t>(n), 1.0);  // mu^{2j}
  for (int j = 1; j < n; ++j) mu2[j] = mu2[j - 1] * mu * mu;
  std::complex<double> s = 0, zp = z;
  for (int p = 1; p <= n; ++p) {
    zp *= z2;
    s += eq.a_coeff(p).get_d() * mu2[static_cast<std::size_t>(n - p)] * zp;
  }
  VelocityPair v{-s.imag() / alpha, -s.real() / beta};
  if (include_transport) {
    const double t = eq.transport.get_d() * std::pow(mu, 2 * n);
    v.delta -= t;
    v.gamma -= t;
  }
  return v;
}

double soliton_speed(int n, double c, double mu) {
  const HierarchyEquation& eq = gardner_rhs(n);
  double v = 0;
  for (int p = 1; p <= n; ++p)
    v += eq.a_coeff(p).get_d() * std::pow(c, 2 * p) * std::pow(mu, 2 * (n - p));
  return v;
}

}  // namespace ghl
