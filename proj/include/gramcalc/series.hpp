#pragma once

// Truncated power series in t with RhoElement coefficients.

#include "gramcalc/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gramcalc {

class Series {
 public:
  Series() = default;
  /// Zero series truncated at t^order.
  explicit Series(int order);
  Series(int order, std::vector<RhoElement> coeffs);

  static Series constant(int order, const RhoElement& c);
  static Series from_polys(const std::vector<LaurentPoly>& coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RhoElement& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  RhoElement& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<RhoElement>& coeffs() const { return coeffs_; }

  /// Drops all coefficients above t^order.
  Series truncated(int order) const;
  /// Scales t: coefficient n is multiplied by c^n.
  Series scaled_variable(const Rational& c) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const RhoElement& c);
  friend Series operator*(const RhoElement& c, Series a) { return std::move(a) * c; }

  bool operator==(const Series&) const = default;

 private:
  std::vector<RhoElement> coeffs_;
};

enum class SeriesOp { add, mul, ddt };

/// Binary ops require equal orders (std::invalid_argument otherwise); ddt
/// ignores s2 and returns a series one order shorter.
Series series_arith(SeriesOp kind, const Series& s1, const Series* s2 = nullptr);
Series ddt(const Series& s);

/// Requires the constant term to be a nonzero rational times a monomial with
/// no rho part; otherwise std::domain_error("constant term not a unit").
Series series_reciprocal(const Series& s);

/// Requires a zero constant term; otherwise std::domain_error.
Series series_exp(const Series& s);

/// cosh(rho t) = sum (y^2-x^2)^n t^(2n)/(2n)!
Series cosh_kernel(int order);
/// sinh(rho t)/rho = sum (y^2-x^2)^n t^(2n+1)/(2n+1)!
Series sinh_kernel(int order);

/// Closed-form generating functions by id. Ids: bg, genx, gen_xinv_y, geny,
/// m_bivariate, stanley_num, stanley_den, gena_num, gena_den, cosh_rho,
/// sinh_over_rho. Throws std::invalid_argument for an unknown id.
Series closed_form(std::string_view name, int order);
const std::vector<std::string>& closed_form_names();

std::string to_string(const Series& s);

}  // namespace gramcalc
