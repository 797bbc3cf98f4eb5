#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ghl/diffpoly.hpp"

namespace ghl {

inline constexpr int kMaxHierarchyIndex = 8;

/// The (2n+1)th-order flow u_t = rhs, in the moving frame that removes the
/// mu^{2n} u_x transport term.
struct HierarchyEquation {
  int n = 0;
  bool mkdv = false;
  DiffPoly rhs;                // F with u_t = F
  std::vector<mpq_class> a;    // a[p-1] = a_{p,n}, p = 1..n
  mpq_class transport;         // a_{0,n}, the removed mu^{2n} u_x coefficient

  const mpq_class& a_coeff(int p) const { return a.at(static_cast<std::size_t>(p - 1)); }
  int order() const { return 2 * n + 1; }

  /// P = -F, i.e. the equation as u_t + P = 0.
  DiffPoly flux_form() const { return -rhs; }
};

/// L_0 = 1/2, d/dx L_{n+1} = (D^3 + 4 v D + 2 v_x) L_n. Memoized.
const DiffPoly& lenard(int n);

/// Gardner flow for 1 <= n <= 8. Throws RealnessViolation if the assembled
/// right-hand side has an imaginary residue.
const HierarchyEquation& gardner_rhs(int n);

/// gardner_rhs(n) with mu -> 0.
const HierarchyEquation& mkdv_rhs(int n);

struct VelocityPair {
  double delta = 0;
  double gamma = 0;
};

/// gamma = -Re S / beta, delta = -Im S / alpha with
/// S = sum_{p=1..n} a_{p,n} (beta + i alpha)^{2p+1} mu^{2(n-p)}.
/// include_transport additionally subtracts a_{0,n} mu^{2n} from both.
VelocityPair velocity_pair(int n, double alpha, double beta, double mu,
                           bool include_transport = false);

/// sum_p a_{p,n} c^{2p} mu^{2(n-p)}
double soliton_speed(int n, double c, double mu);

}  // namespace ghl
