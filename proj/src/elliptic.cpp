#include "ghl/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ghl/error.hpp"

namespace ghl {

double elliptic_K(double param) {
  if (!(param >= 0.0 && param < 1.0))
    throw DomainError("elliptic_K needs 0 <= m < 1, got " + std::to_string(param));
  double a = 1.0;
  double b = std::sqrt(1.0 - param);
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (a + b);
}

JacobiValues jacobi(double u, double param) {
  if (!(param >= 0.0 && param <= 1.0))
    throw DomainError("jacobi needs 0 <= m <= 1, got " + std::to_string(param));
  JacobiValues r;
  if (param == 0.0) {
    r.sn = std::sin(u);
    r.cn = std::cos(u);
  } else if (param == 1.0) {
    r.sn = std::tanh(u);
    r.cn = 1.0 / std::cosh(u);
    r.dn = r.cn;
  } else {
    constexpr int kMax = 40;
    std::array<double, kMax + 1> a{}, c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - param);
    c[0] = std::sqrt(param);
    int n = 0;
    while (n < kMax && std::abs(c[n]) > 1e-16 * a[n]) {
      a[n + 1] = 0.5 * (a[n] + b);
      c[n + 1] = 0.5 * (a[n] - b);
      b = std::sqrt(a[n] * b);
      ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int j = n; j > 0; --j) {
      phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
    }
    r.sn = std::sin(phi);
    r.cn = std::cos(phi);
    // dn^2 = (1 - m) + m cn^2 is a sum of nonnegative terms; the Landen
    // quotient for dn is 0/0 at the quarter period.
    r.dn = std::sqrt((1.0 - param) + param * r.cn * r.cn);
  }
  r.nd = 1.0 / r.dn;
  return r;
}

JacobiJets jacobi_jets(int order, double u0, double rate, double param) {
  const JacobiValues v = jacobi(u0, param);
  JacobiJets j{Jet(order, v.sn), Jet(order, v.cn), Jet(order, v.dn)};
  // (k+1) f_{k+1} = rate * [product]_k, products built from known coefficients
  for (int k = 0; k < order; ++k) {
    double cd = 0, sd = 0, sc = 0;
    for (int i = 0; i <= k; ++i) {
      cd += j.cn[i] * j.dn[k - i];
      sd += j.sn[i] * j.dn[k - i];
      sc += j.sn[i] * j.cn[k - i];
    }
    j.sn[k + 1] = rate * cd / (k + 1);
    j.cn[k + 1] = -rate * sd / (k + 1);
    j.dn[k + 1] = -rate * param * sc / (k + 1);
  }
  return j;
}

}  // namespace ghl
