#include "doctest.h"
#include "generators.hpp"

#include "gramcalc/grammar.hpp"
#include "gramcalc/series.hpp"

using namespace gramcalc;
using gramcalc::testing::PolyGen;

namespace {

const LaurentPoly X = LaurentPoly::var(Var::x);
const LaurentPoly Y = LaurentPoly::var(Var::y);
const LaurentPoly A = LaurentPoly::var(Var::a);
const LaurentPoly X_INV = LaurentPoly::var(Var::x, -1);

const Grammar& peak() {
  static const Grammar g = Grammar::preset("peak");
  return g;
}
const Grammar& run() {
  static const Grammar g = Grammar::preset("run");
  return g;
}

}  // namespace

TEST_CASE("derive on the peak grammar") {
  CHECK(derive(peak(), X) == X * Y);
  CHECK(derive(peak(), Y) == X * X);
  CHECK(derive(peak(), X * X - Y * Y).is_zero());
  CHECK(derive(peak(), X_INV) == -(X_INV * Y));
  CHECK(derive(peak(), LaurentPoly(5)).is_zero());
  // a has no rule in the peak grammar.
  CHECK(derive(peak(), A).is_zero());
}

TEST_CASE("derive_n reproduces the up-down run table") {
  CHECK(derive_n(run(), A, 0) == A);
  CHECK(derive_n(run(), A, 1) == A * X);
  CHECK(derive_n(run(), A, 3) == A * parse_poly("x*y^2 + 3*x^2*y + 2*x^3"));
  CHECK(derive_n(run(), A, 4) == A * parse_poly("x*y^3 + 7*x^2*y^2 + 11*x^3*y + 5*x^4"));
  CHECK(derive_n(run(), A, 6) ==
        A * parse_poly("x*y^5 + 31*x^2*y^4 + 148*x^3*y^3 + 268*x^4*y^2 + 211*x^5*y + 61*x^6"));
  CHECK_THROWS_AS(derive_n(run(), A, -1), std::invalid_argument);
}

TEST_CASE("iterated derivatives of x^-1") {
  const LaurentPoly rho_sq = Y * Y - X * X;
  for (int n = 0; n <= 6; ++n) {
    CHECK(derive_n(peak(), X_INV, 2 * n) == X_INV * poly_pow(rho_sq, n));
    CHECK(derive_n(peak(), X_INV, 2 * n + 1) == -(X_INV * Y * poly_pow(rho_sq, n)));
  }
}

TEST_CASE("constants of the preset grammars") {
  CHECK(is_constant(run(), (X + Y) * LaurentPoly::var(Var::a, -1)));
  CHECK(is_constant(Grammar::preset("euler"), X - Y));
  CHECK(is_constant(Grammar::preset("andre"), Y * Y - X * Rational(2)));
  CHECK(is_constant(peak(), X * X - Y * Y));
  CHECK_FALSE(is_constant(peak(), X));
}

TEST_CASE("grammar literals") {
  const Grammar g = Grammar::parse("x->x*y; y->x^2");
  CHECK(g.to_string() == peak().to_string());
  const Grammar uv = Grammar::parse("u -> v^2 ; v->1/2*u*v;");
  CHECK(uv.to_string() == Grammar::preset("uv").to_string());
  CHECK_THROWS_AS(Grammar::parse("x=x*y"), std::invalid_argument);
  CHECK_THROWS_AS(Grammar::parse("x->x*y; x->y"), std::invalid_argument);
  CHECK_THROWS_AS(Grammar::parse("xy->x"), std::invalid_argument);
  CHECK_THROWS_AS(Grammar::parse("q->x"), std::invalid_argument);
  CHECK_THROWS_AS(Grammar::parse(" ; "), std::invalid_argument);
  CHECK_THROWS_AS(Grammar::preset("nope"), std::invalid_argument);
}

TEST_CASE("gen_series examples") {
  const Series s = gen_series(peak(), X, 2);
  CHECK(s.order() == 2);
  CHECK(s[0] == RhoElement(X));
  CHECK(s[1] == RhoElement(X * Y));
  CHECK(s[2] == RhoElement((X * Y * Y + poly_pow(X, 3)) * Rational(1, 2)));

  const Series one = gen_series(peak(), LaurentPoly(1), 5);
  CHECK(one == Series::constant(5, RhoElement(1)));

  CHECK(gen_series(run(), A, 3)[3] == RhoElement(A * parse_poly("x*y^2 + 3*x^2*y + 2*x^3") * Rational(1, 6)));
}

TEST_CASE("grammar H versus the peak grammar") {
  // H tracks a exactly like x, so x * D_H^n(a) = a * D_G^n(x).
  const Grammar h = Grammar::preset("h");
  for (int n = 0; n <= 10; ++n) CHECK(X * derive_n(h, A, n) == A * derive_n(peak(), X, n));
}

TEST_CASE("Leibniz law and linearity on every preset") {
  PolyGen gen(31337);
  for (const auto& name : Grammar::preset_names()) {
    const Grammar g = Grammar::preset(name);
    for (int i = 0; i < 60; ++i) {
      const auto p = gen.poly({Var::a, Var::x, Var::y, Var::u, Var::v}, 3, 3, -1);
      const auto q = gen.poly({Var::a, Var::x, Var::y, Var::u, Var::v}, 3, 3, -1);
      const Rational alpha = gen.rational();
      const Rational beta = gen.rational();
      CHECK(derive(g, p * q) == derive(g, p) * q + p * derive(g, q));
      CHECK(derive(g, p * alpha + q * beta) == derive(g, p) * alpha + derive(g, q) * beta);
    }
  }
}

TEST_CASE("Gen is multiplicative") {
  PolyGen gen(4242);
  constexpr int kOrder = 6;
  CHECK(gen_series(peak(), X, kOrder) * gen_series(peak(), X_INV, kOrder) == Series::constant(kOrder, RhoElement(1)));
  for (int i = 0; i < 30; ++i) {
    const LaurentPoly f(gen.monomial({Var::a, Var::x, Var::y}, -2, 2), gen.nonzero_rational());
    const LaurentPoly h(gen.monomial({Var::a, Var::x, Var::y}, -2, 2), gen.nonzero_rational());
    CHECK(gen_series(run(), f * h, kOrder) == gen_series(run(), f, kOrder) * gen_series(run(), h, kOrder));
  }
}

TEST_CASE("constants pass through iterated derivatives") {
  const LaurentPoly c = (X + Y) * LaurentPoly::var(Var::a, -1);
  const LaurentPoly f = A * A * X;
  for (int n = 0; n <= 8; ++n) CHECK(derive_n(run(), c * f, n) == c * derive_n(run(), f, n));
}
