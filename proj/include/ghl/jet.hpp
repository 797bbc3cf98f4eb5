#pragma once

#include <vector>

namespace ghl {

/// Truncated Taylor series f(h) = sum_{k<=K} c_k h^k. Used for exact
/// derivatives of the closed-form solutions along a direction in (y1, y2).
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order, double value = 0.0);

  static Jet constant(int order, double value) { return Jet(order, value); }
  // a + b h
  static Jet linear(int order, double a, double b);
  // sin(a + b h), cos(a + b h)
  static void sin_cos(int order, double a, double b, Jet& s, Jet& c);
  // exp(a + b h)
  static Jet exp_linear(int order, double a, double b);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  double value() const { return c_[0]; }

  /// d^k f / dh^k at h = 0 for k = 0..order
  std::vector<double> derivatives() const;
  /// d/dh, truncated one order lower
  Jet derivative() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  Jet operator-() const { return *this * -1.0; }

 private:
  std::vector<double> c_;
};

}  // namespace ghl
