#pragma once

// Exact sparse Laurent polynomials over the rationals in the fixed alphabet
// {a, x, y, u, v}, and the quadratic extension by rho with rho^2 = y^2 - x^2.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace gramcalc {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class Var : std::uint8_t { a = 0, x = 1, y = 2, u = 3, v = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::a, Var::x, Var::y, Var::u, Var::v};

char var_symbol(Var v);
/// Throws std::invalid_argument for symbols outside the alphabet.
Var var_from_symbol(char c);

/// Product of variable powers. Exponents may be negative; an exponent of zero
/// means the variable is absent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::initializer_list<std::pair<Var, int>> powers);

  static Monomial of(Var v, int exponent = 1);

  int exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  void set_exponent(Var v, int e) { exps_[static_cast<std::size_t>(v)] = e; }

  int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exponent-wise negation.
  Monomial inverse() const;
  Monomial pow(int k) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic on (a, x, y, u, v).
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::array<int, kNumVars> exps_{};
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT
  LaurentPoly(const Monomial& m, const Rational& c = 1);

  static LaurentPoly var(Var v, int exponent = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m; zero if absent.
  Rational coefficient(const Monomial& m) const;
  /// Some(monomial, coefficient) when the polynomial is a single term.
  std::optional<std::pair<Monomial, Rational>> as_term() const;
  /// The constant term if the polynomial is constant (including zero).
  std::optional<Rational> as_constant() const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(LaurentPoly p, const Rational& c) { return p *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p *= c; }

  bool operator==(const LaurentPoly&) const = default;

  /// Multiplies every monomial by m.
  LaurentPoly shifted(const Monomial& m) const;
  /// Replaces v by value everywhere. value must be nonzero if v occurs with a
  /// negative exponent.
  LaurentPoly substitute(Var v, const Rational& value) const;
  LaurentPoly substitute(Var v, int value) const { return substitute(v, Rational(value)); }
  /// Replaces v by the polynomial q; negative exponents of v require q to be
  /// a single term.
  LaurentPoly substitute(Var v, const LaurentPoly& q) const;
  /// Renames variable from -> to (merging exponents if `to` already occurs).
  LaurentPoly rename(Var from, Var to) const;

 private:
  TermMap terms_;
};

enum class ArithKind { add, sub, mul };
LaurentPoly poly_arith(ArithKind kind, const LaurentPoly& p, const LaurentPoly& q);

/// k-th power. Negative k only for single-term p; otherwise throws
/// std::domain_error("not invertible").
LaurentPoly poly_pow(const LaurentPoly& p, int k);

Rational coefficient_of(const LaurentPoly& p, const Monomial& m);

/// Text form: "7*a*x^2*y^2 + 11*a*x^3*y", "x^-1", "-1/2*u*v".
std::string to_string(const Monomial& m);
std::string to_string(const LaurentPoly& p);
std::string to_string(const Rational& r);

/// Parses the text form, plus parentheses and integer powers of
/// parenthesised groups. Multiplication must be explicit. Throws
/// std::invalid_argument on malformed input.
LaurentPoly parse_poly(std::string_view text);
Rational parse_rational(std::string_view text);

/// P + Q*rho with rho^2 = y^2 - x^2.
struct RhoElement {
  LaurentPoly p;
  LaurentPoly q;

  RhoElement() = default;
  RhoElement(LaurentPoly p_, LaurentPoly q_ = {}) : p(std::move(p_)), q(std::move(q_)) {}  // NOLINT

  static const LaurentPoly& rho_squared();
  static RhoElement rho() { return {LaurentPoly{}, LaurentPoly{1}}; }

  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  RhoElement& operator+=(const RhoElement& o);
  RhoElement& operator-=(const RhoElement& o);
  RhoElement& operator*=(const Rational& c);
  RhoElement operator-() const { return {-p, -q}; }

  friend RhoElement operator+(RhoElement a, const RhoElement& b) { return a += b; }
  friend RhoElement operator-(RhoElement a, const RhoElement& b) { return a -= b; }
  friend RhoElement operator*(const RhoElement& a, const RhoElement& b);
  friend RhoElement operator*(RhoElement a, const Rational& c) { return a *= c; }

  bool operator==(const RhoElement&) const = default;

  /// Applies substitute(v, value) to both parts; the relation for rho is
  /// unchanged, so callers substituting x or y must know what they mean.
  RhoElement substitute(Var v, const Rational& value) const;
};

RhoElement rho_mul(const RhoElement& e1, const RhoElement& e2);

std::string to_string(const RhoElement& e);

}  // namespace gramcalc
