#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghl/coeff.hpp"

namespace ghl {

/// mu^p * prod_j (v_{jx})^{e_j}. `exps` holds (order, exponent) pairs sorted by
/// order with every exponent >= 1; an empty list is the constant monomial.
struct DiffMonomial {
  int mu_power = 0;
  std::vector<std::pair<int, int>> exps;

  static DiffMonomial one() { return {}; }
  static DiffMonomial variable(int order, int exponent = 1);
  static DiffMonomial mu(int power = 1);

  int degree() const;       // sum of exponents
  int top_order() const;    // highest derivative present, -1 for none
  int total_order() const;  // sum of order * exponent
  int exponent_of(int order) const;
  bool is_linear() const { return degree() == 1; }

  // mu_power * w_mu + sum_j e_j * (j + w_v)
  int weight(int w_v, int w_mu = 1) const;

  DiffMonomial operator*(const DiffMonomial& o) const;
  // Removes `count` copies of v_{order x}; requires they are present.
  DiffMonomial without(int order, int count) const;

  auto operator<=>(const DiffMonomial&) const = default;

  std::string to_string(std::string_view var = "u") const;
};

/// Name of the j-th derivative variable in canonical text: u, ux, uxx, u3x, ...
std::string variable_name(std::string_view var, int order);

/// Exact differential polynomial: finite sum of Gaussian-rational multiples of
/// DiffMonomials. Zero coefficients are never stored.
class DiffPoly {
 public:
  using Terms = std::map<DiffMonomial, Coeff>;

  DiffPoly() = default;
  DiffPoly(const Coeff& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : DiffPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static DiffPoly var(int order = 0);
  static DiffPoly mu();
  static DiffPoly monomial(const DiffMonomial& m, const Coeff& c = Coeff(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int max_order() const;
  int max_mu_power() const;

  void add_term(const DiffMonomial& m, const Coeff& c);

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Coeff& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Coeff& c) { return a *= c; }
  friend DiffPoly operator*(const Coeff& c, DiffPoly a) { return a *= c; }
  DiffPoly operator-() const;
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

  DiffPoly pow(int e) const;
  DiffPoly drop_mu() const;  // mu -> 0

  /// Canonical text form: terms sorted by (total derivative order desc,
  /// mu power desc, exponent list desc), e.g. "+10*mu^2*u3x +20*mu*u*u3x".
  std::string to_string(std::string_view var = "u") const;

 private:
  Terms terms_;
};

/// Parses the canonical text form (and a little more: arbitrary products of
/// factors, `^` powers, '#' comments, line breaks). `aliases` maps extra
/// factor names to polynomials, e.g. {"w", mu + u} for shifted transcriptions.
DiffPoly parse_diffpoly(std::string_view text, std::string_view var = "u",
                        const std::map<std::string, DiffPoly>& aliases = {});

enum class CombineKind { add, sub, mul };

DiffPoly combine(const DiffPoly& p, const DiffPoly& q, CombineKind kind);

/// D_x with D_x(v_{jx}) = v_{(j+1)x}, D_x(mu) = 0.
DiffPoly total_derivative(const DiffPoly& p);

/// The unique q with zero constant term and D_x q = p. Throws NotExact when p
/// is not a total derivative.
DiffPoly formal_integral(const DiffPoly& p);

/// Replaces each v_{jx} in p by D_x^j(arg).
DiffPoly substitute_argument(const DiffPoly& p, const DiffPoly& arg);

Coeff coefficient_of(const DiffPoly& p, const DiffMonomial& m);

/// True iff every monomial has weight `expected` (w_mu = 1).
bool weight_check(const DiffPoly& p, int w_v, int expected);

bool is_real(const DiffPoly& p);

}  // namespace ghl
