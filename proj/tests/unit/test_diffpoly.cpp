#include <doctest.h>

#include "ghl/diffpoly.hpp"
#include "ghl/error.hpp"

using namespace ghl;

namespace {
DiffPoly P(const char* s) { return parse_diffpoly(s); }
}  // namespace

TEST_CASE("coefficients are exact Gaussian rationals") {
  const Coeff a = Coeff::rational(1, 3) + Coeff::rational(1, 6);
  CHECK(a == Coeff::rational(1, 2));
  CHECK(Coeff::i() * Coeff::i() == Coeff(-1));
  const Coeff z(mpq_class(1, 2), mpq_class(3));
  CHECK(Coeff::parse(z.to_string()) == z);
  CHECK((z / z) == Coeff(1));
  CHECK_THROWS_AS(Coeff(1) / Coeff(0), InvalidParameter);
}

TEST_CASE("canonical text round-trips") {
  const char* text =
      "+u5x +10*mu^2*u3x +20*mu*u*u3x +40*mu*ux*uxx +10*u^2*u3x +40*u*ux*uxx +10*ux^3 "
      "+120*mu^3*u*ux +180*mu^2*u^2*ux +120*mu*u^3*ux +30*u^4*ux";
  const DiffPoly p = P(text);
  CHECK(p.to_string() == text);
  CHECK(P(p.to_string().c_str()) == p);
}

TEST_CASE("parser accepts products, powers, aliases and comments") {
  CHECK(P("2*u*u") == P("2*u^2"));
  CHECK(P("(1/2)*ux # trailing comment\n - 3*u") == P("-3*u + 1/2*ux"));
  const std::map<std::string, DiffPoly> w{{"w", DiffPoly::mu() + DiffPoly::var(0)}};
  CHECK(parse_diffpoly("w^2", "u", w) == P("mu^2 + 2*mu*u + u^2"));
  CHECK(parse_diffpoly("v3x*v", "v") == DiffPoly::var(3) * DiffPoly::var(0));
  CHECK(P("(2i)*u").to_string() == "+(2i)*u");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(P("u +-ux"), ParseError);
  CHECK_THROWS_AS(P("u*q"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("(1/2*u"), ParseError);
}

TEST_CASE("total derivative") {
  CHECK(total_derivative(P("u^2")) == P("2*u*ux"));
  CHECK(total_derivative(P("mu*u3x")) == P("mu*u4x"));
  CHECK(total_derivative(P("mu^2")).is_zero());
}

TEST_CASE("formal integral inverts the total derivative") {
  for (const char* s : {"u^3*uxx", "mu*u*ux", "u4x + 3*u^2*uxx", "ux^2*u3x + u^5"}) {
    const DiffPoly q = P(s);
    CHECK(formal_integral(total_derivative(q)) == q);
  }
  CHECK_THROWS_AS(formal_integral(P("ux^2")), NotExact);
  CHECK_THROWS_AS(formal_integral(P("u")), NotExact);
}

TEST_CASE("substitution, coefficients, weights, realness") {
  CHECK(substitute_argument(P("u^2"), P("ux")) == P("ux^2"));
  CHECK(substitute_argument(P("ux"), P("u^2")) == P("2*u*ux"));
  const DiffPoly p = P("10*mu^2*u3x + 20*mu*u*u3x");
  const DiffMonomial m = DiffMonomial::mu(2) * DiffMonomial::variable(3);
  CHECK(coefficient_of(p, m) == Coeff(10));
  CHECK(weight_check(p, 1, 6));
  CHECK_FALSE(weight_check(p + P("u"), 1, 6));
  CHECK(is_real(p));
  CHECK_FALSE(is_real(P("(1+i)*u")));
  CHECK(combine(p, p, CombineKind::sub).is_zero());
  CHECK(combine(P("u"), P("ux"), CombineKind::mul) == P("u*ux"));
}
