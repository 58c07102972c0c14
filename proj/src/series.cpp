#include "gramcalc/series.hpp"

#include <stdexcept>

namespace gramcalc {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<RhoElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(int order, const RhoElement& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::from_polys(const std::vector<LaurentPoly>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
  Series s(static_cast<int>(coeffs.size()) - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = RhoElement(coeffs[i]);
  return s;
}

Series Series::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(order, std::vector<RhoElement>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::scaled_variable(const Rational& c) const {
  Series s = *this;
  Rational power = 1;
  for (auto& coeff : s.coeffs_) {
    coeff *= power;
    power *= c;
  }
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const int n = a.order();
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series operator*(Series a, const RhoElement& c) {
  for (auto& coeff : a.coeffs_) coeff = coeff * c;
  return a;
}

Series ddt(const Series& s) {
  if (s.order() == 0) throw std::invalid_argument("ddt needs order >= 1");
  Series r(s.order() - 1);
  for (int n = 0; n < s.order(); ++n) r[n] = s[n + 1] * Rational(n + 1);
  return r;
}

Series series_arith(SeriesOp kind, const Series& s1, const Series* s2) {
  switch (kind) {
    case SeriesOp::ddt: return ddt(s1);
    case SeriesOp::add:
    case SeriesOp::mul:
      if (s2 == nullptr) throw std::invalid_argument("binary series operation needs two operands");
      return kind == SeriesOp::add ? s1 + *s2 : s1 * *s2;
  }
  throw std::invalid_argument("unknown series operation");
}

Series series_reciprocal(const Series& s) {
  const RhoElement& c0 = s[0];
  const auto term = c0.p.as_term();
  if (!c0.q.is_zero() || !term) throw std::domain_error("constant term not a unit");
  const RhoElement inv0(poly_pow(c0.p, -1));
  Series r(s.order());
  r[0] = inv0;
  for (int n = 1; n <= s.order(); ++n) {
    RhoElement acc;
    for (int k = 1; k <= n; ++k) {
      if (s[k].is_zero() || r[n - k].is_zero()) continue;
      acc += s[k] * r[n - k];
    }
    r[n] = -(inv0 * acc);
  }
  return r;
}

Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw std::domain_error("exp needs a zero constant term");
  // E' = s' E, so n E_n = sum_{k=1..n} k s_k E_{n-k}.
  Series e(s.order());
  e[0] = RhoElement(LaurentPoly(1));
  for (int n = 1; n <= s.order(); ++n) {
    RhoElement acc;
    for (int k = 1; k <= n; ++k) {
      if (s[k].is_zero() || e[n - k].is_zero()) continue;
      acc += (s[k] * e[n - k]) * Rational(k);
    }
    e[n] = acc * Rational(1, n);
  }
  return e;
}

namespace {

// Coefficients (y^2-x^2)^m / j! placed at t^j for j = 2m + parity.
Series hyperbolic_kernel(int order, int parity) {
  Series s(order);
  Rational fact = 1;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    if (j % 2 == parity) s[j] = RhoElement(poly_pow(RhoElement::rho_squared(), j / 2) * Rational(1 / fact));
  }
  return s;
}

Series monomial_times(const LaurentPoly& c, const Series& s) { return RhoElement(c) * s; }

}  // namespace

Series cosh_kernel(int order) { return hyperbolic_kernel(order, 0); }
Series sinh_kernel(int order) { return hyperbolic_kernel(order, 1); }

const std::vector<std::string>& closed_form_names() {
  static const std::vector<std::string> kNames{"bg",          "genx",        "gen_xinv_y", "geny",
                                               "m_bivariate", "stanley_num", "stanley_den", "gena_num",
                                               "gena_den",    "cosh_rho",    "sinh_over_rho"};
  return kNames;
}

Series closed_form(std::string_view name, int order) {
  const auto x = LaurentPoly::var(Var::x);
  const auto y = LaurentPoly::var(Var::y);
  const auto a = LaurentPoly::var(Var::a);
  const auto x_inv = LaurentPoly::var(Var::x, -1);
  const Series C = cosh_kernel(order);
  const Series S = sinh_kernel(order);

  if (name == "cosh_rho") return C;
  if (name == "sinh_over_rho") return S;
  if (name == "bg") return monomial_times(x_inv, C) - monomial_times(x_inv * y, S);
  if (name == "genx") return series_reciprocal(closed_form("bg", order));
  if (name == "gen_xinv_y")
    return monomial_times(x_inv * y, C) - monomial_times(x_inv * RhoElement::rho_squared(), S);
  if (name == "geny") return closed_form("genx", order) * closed_form("gen_xinv_y", order);
  if (name == "m_bivariate")
    return Series::constant(order, RhoElement(LaurentPoly(1) - y)) + closed_form("geny", order);

  // e^{rho t} = C + rho S, e^{2 rho t} is the same with t -> 2t.
  const Series e1 = C + RhoElement::rho() * S;
  const Series e2 = e1.scaled_variable(2);
  const RhoElement rho = RhoElement::rho();
  const RhoElement Y(y);
  const RhoElement rho_sq(RhoElement::rho_squared());

  if (name == "gena_num" || name == "stanley_num") {
    const Series inner = Series::constant(order, Y + rho) + RhoElement(x * Rational(2)) * e1 + (Y - rho) * e2;
    Series num = RhoElement(a * (y - x)) * inner;
    if (name == "stanley_num") {
      for (int n = 0; n <= order; ++n) num[n] = num[n].substitute(Var::a, 1).substitute(Var::y, 1);
    }
    return num;
  }
  if (name == "gena_den" || name == "stanley_den") {
    Series den = Series::constant(order, rho_sq + Y * rho) + (rho_sq - Y * rho) * e2;
    if (name == "stanley_den") {
      for (int n = 0; n <= order; ++n) den[n] = den[n].substitute(Var::y, 1);
    }
    return den;
  }
  throw std::invalid_argument("unknown closed form \"" + std::string(name) + "\"");
}

std::string to_string(const Series& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    out += std::to_string(n) + ": " + to_string(s[n]) + "\n";
  }
  return out;
}

}  // namespace gramcalc
