#include "doctest.h"
#include "generators.hpp"

#include "gramcalc/poly.hpp"

using namespace gramcalc;
using gramcalc::testing::PolyGen;

namespace {

const LaurentPoly X = LaurentPoly::var(Var::x);
const LaurentPoly Y = LaurentPoly::var(Var::y);
const LaurentPoly A = LaurentPoly::var(Var::a);

}  // namespace

TEST_CASE("variables outside the alphabet are rejected") {
  CHECK(var_from_symbol('u') == Var::u);
  CHECK_THROWS_AS(var_from_symbol('z'), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x*z"), std::invalid_argument);
}

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(ArithKind::mul, X + Y, X - Y) == X * X - Y * Y);
  const LaurentPoly p = parse_poly("3*x^2*y - 1/2*a");
  CHECK(poly_arith(ArithKind::add, p, LaurentPoly{}) == p);
  CHECK(poly_arith(ArithKind::mul, X * Y * Y, LaurentPoly(Rational(2)) * poly_pow(X, 3) * Y) ==
        LaurentPoly(Monomial{{Var::x, 4}, {Var::y, 3}}, 2));
  CHECK(poly_arith(ArithKind::sub, p, p).is_zero());
}

TEST_CASE("poly_pow") {
  CHECK(poly_pow(X, -1) == LaurentPoly::var(Var::x, -1));
  CHECK(poly_pow(Y * Y - X * X, 2) == parse_poly("y^4 - 2*x^2*y^2 + x^4"));
  CHECK_THROWS_WITH_AS(poly_pow(X + Y, -1), "not invertible", std::domain_error);
  CHECK(poly_pow(X + Y, 0) == LaurentPoly(1));
  CHECK(poly_pow(LaurentPoly(Monomial::of(Var::x, 2), Rational(2, 3)), -2) ==
        LaurentPoly(Monomial::of(Var::x, -4), Rational(9, 4)));
}

TEST_CASE("coefficient_of") {
  const LaurentPoly d4 = A * parse_poly("x*y^3 + 7*x^2*y^2 + 11*x^3*y + 5*x^4");
  CHECK(coefficient_of(d4, Monomial{{Var::a, 1}, {Var::x, 3}, {Var::y, 1}}) == 11);
  CHECK(coefficient_of(LaurentPoly{}, Monomial::of(Var::x)) == 0);
  CHECK(coefficient_of(X * Y * Y + poly_pow(X, 3), Monomial::of(Var::x, 3)) == 1);
}

TEST_CASE("rho_mul") {
  const RhoElement rho = RhoElement::rho();
  CHECK(rho_mul(rho, rho) == RhoElement(Y * Y - X * X));
  CHECK(rho_mul(RhoElement(Y, 1), RhoElement(Y, -1)) == RhoElement(X * X));
  const RhoElement e(parse_poly("x - 2*y^2"), parse_poly("3/2*a"));
  CHECK(rho_mul(RhoElement(1), e) == e);
}

TEST_CASE("text rendering follows ascending graded lex order") {
  CHECK(to_string(A * parse_poly("5*x^4 + 11*x^3*y + x*y^3 + 7*x^2*y^2")) ==
        "a*x*y^3 + 7*a*x^2*y^2 + 11*a*x^3*y + 5*a*x^4");
  CHECK(to_string(X * X - Y * Y) == "-y^2 + x^2");
  CHECK(to_string(LaurentPoly::var(Var::x, -1) * Y * Rational(-1)) == "-x^-1*y");
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK(to_string(parse_poly("1/2*u*v")) == "1/2*u*v");
  CHECK(to_string(RhoElement(Y, LaurentPoly(-1))) == "(y) + (-1)*rho");
}

TEST_CASE("parser accepts its own output and parenthesised groups") {
  CHECK(parse_poly("(x+y)*a^-1") == (X + Y) * LaurentPoly::var(Var::a, -1));
  CHECK(parse_poly("(x - y)^3") == poly_pow(X - Y, 3));
  CHECK(parse_poly("-x^-1*y") == -(LaurentPoly::var(Var::x, -1) * Y));
  CHECK(parse_poly("x/y") == X * LaurentPoly::var(Var::y, -1));
  CHECK(parse_poly("x^(-2)") == LaurentPoly::var(Var::x, -2));
  CHECK_THROWS_AS(parse_poly("x +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("xy"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x/(x+y)"), std::invalid_argument);

  PolyGen gen(7);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = gen.poly({Var::a, Var::x, Var::y, Var::u, Var::v}, 5, 3, -2);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("substitution and renaming") {
  const LaurentPoly p = parse_poly("a*x*y^2 + 3*y^-1");
  CHECK(p.substitute(Var::y, 1) == parse_poly("a*x + 3"));
  CHECK(p.substitute(Var::y, X) == parse_poly("a*x^3 + 3*x^-1"));
  CHECK(parse_poly("x^2*y").rename(Var::x, Var::a) == parse_poly("a^2*y"));
  CHECK_THROWS_AS(p.substitute(Var::y, Rational(0)), std::domain_error);
}

TEST_CASE("ring axioms on random inputs") {
  PolyGen gen(2024);
  const std::vector<Var> vars{Var::a, Var::x, Var::y};
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.poly(vars, 4, 3, -1);
    const auto q = gen.poly(vars, 4, 3, -1);
    const auto r = gen.poly(vars, 4, 3, -1);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK_FALSE(gramcalc::testing::has_stored_zero(p * q - q * p + r));
  }
}

TEST_CASE("monomial powers invert") {
  PolyGen gen(99);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly m(gen.monomial({Var::x, Var::y, Var::a}, -3, 3), gen.nonzero_rational());
    for (int k = -5; k <= 5; ++k) CHECK(poly_pow(m, k) * poly_pow(m, -k) == LaurentPoly(1));
  }
}

TEST_CASE("rho multiplication matches expansion then reduction") {
  PolyGen gen(5);
  const std::vector<Var> vars{Var::x, Var::y};
  const LaurentPoly rho_sq = Y * Y - X * X;
  for (int i = 0; i < 200; ++i) {
    const RhoElement e1(gen.poly(vars), gen.poly(vars));
    const RhoElement e2(gen.poly(vars), gen.poly(vars));
    // Expand (p1 + q1 r)(p2 + q2 r) with r a formal symbol (u stands in), then
    // reduce u^2 -> rho^2.
    const LaurentPoly r = LaurentPoly::var(Var::u);
    const LaurentPoly expanded = (e1.p + e1.q * r) * (e2.p + e2.q * r);
    RhoElement reduced;
    for (const auto& [m, c] : expanded.terms()) {
      Monomial rest = m;
      const int e = m.exponent(Var::u);
      rest.set_exponent(Var::u, 0);
      const LaurentPoly base = poly_pow(rho_sq, e / 2) * LaurentPoly(rest, c);
      if (e % 2 == 0) {
        reduced.p += base;
      } else {
        reduced.q += base;
      }
    }
    CHECK(rho_mul(e1, e2) == reduced);
  }
}
