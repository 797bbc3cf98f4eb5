#include "ghl/jet.hpp"

#include <algorithm>
#include <cmath>

#include "ghl/error.hpp"

namespace ghl {

Jet::Jet(int order, double value) : c_(static_cast<std::size_t>(order + 1), 0.0) {
  if (order < 0) throw InvalidParameter("jet order must be nonnegative");
  c_[0] = value;
}

Jet Jet::linear(int order, double a, double b) {
  Jet j(order, a);
  if (order >= 1) j[1] = b;
  return j;
}

void Jet::sin_cos(int order, double a, double b, Jet& s, Jet& c) {
  s = Jet(order);
  c = Jet(order);
  const double sa = std::sin(a);
  const double ca = std::cos(a);
  double f = 1.0;  // b^k / k!
  for (int k = 0; k <= order; ++k) {
    // d^k sin = sin(a + k pi/2), d^k cos = cos(a + k pi/2)
    switch (k % 4) {
      case 0: s[k] = f * sa; c[k] = f * ca; break;
      case 1: s[k] = f * ca; c[k] = -f * sa; break;
      case 2: s[k] = -f * sa; c[k] = -f * ca; break;
      default: s[k] = -f * ca; c[k] = f * sa; break;
    }
    f *= b / (k + 1);
  }
}

Jet Jet::exp_linear(int order, double a, double b) {
  Jet e(order);
  double f = std::exp(a);
  for (int k = 0; k <= order; ++k) {
    e[k] = f;
    f *= b / (k + 1);
  }
  return e;
}

std::vector<double> Jet::derivatives() const {
  std::vector<double> d(c_.size());
  double fact = 1.0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    d[k] = c_[k] * fact;
  }
  return d;
}

Jet Jet::derivative() const {
  if (order() == 0) return Jet(0);
  Jet d(order() - 1);
  for (int k = 0; k <= d.order(); ++k) d[k] = (k + 1) * c_[static_cast<std::size_t>(k + 1)];
  return d;
}

Jet& Jet::operator+=(const Jet& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  Jet r(n);
  for (int k = 0; k <= n; ++k) {
    double acc = 0;
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  if (b[0] == 0.0) throw DegenerateDenominator("jet division by a series vanishing at h = 0");
  Jet q(n);
  for (int k = 0; k <= n; ++k) {
    double acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

}  // namespace ghl
