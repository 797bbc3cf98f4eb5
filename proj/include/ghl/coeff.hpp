#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace ghl {

/// Exact Gaussian rational re + i*im. GMP keeps both parts canonical
/// (reduced, positive denominator) after every operation.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Coeff(mpq_class re, mpq_class im = 0);

  static Coeff i() { return Coeff(0, 1); }
  static Coeff rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  Coeff operator-() const { return Coeff(-re_, -im_); }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // "3/2", "-7", "(1/2+3i)", "(-2i)"
  std::string to_string() const;
  static Coeff parse(const std::string& text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace ghl
