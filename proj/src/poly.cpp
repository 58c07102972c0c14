#include "gramcalc/poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gramcalc {

char var_symbol(Var v) {
  static constexpr std::array<char, kNumVars> kSymbols{'a', 'x', 'y', 'u', 'v'};
  return kSymbols[static_cast<std::size_t>(v)];
}

Var var_from_symbol(char c) {
  switch (c) {
    case 'a': return Var::a;
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'u': return Var::u;
    case 'v': return Var::v;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown variable '") + c + "'");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<std::pair<Var, int>> powers) {
  for (const auto& [v, e] : powers) exps_[static_cast<std::size_t>(v)] += e;
}

Monomial Monomial::of(Var v, int exponent) {
  Monomial m;
  m.set_exponent(v, exponent);
  return m;
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  for (int e : exps_)
    if (e != 0) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kNumVars; ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exps_[i] = exps_[i] * k;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  return exps_ <=> other.exps_;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::var(Var v, int exponent) { return LaurentPoly(Monomial::of(v, exponent)); }

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Monomial, Rational>> LaurentPoly::as_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

std::optional<Rational> LaurentPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  // Graded lex is translation invariant, so the shifted keys stay sorted.
  LaurentPoly r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, c);
  return r;
}

LaurentPoly LaurentPoly::substitute(Var v, const Rational& value) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e < 0 && value == 0) throw std::domain_error("substituting zero into a negative power");
    Rational factor = 1;
    Rational base = e >= 0 ? value : Rational(1 / value);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) factor *= base;
    Monomial rest = m;
    rest.set_exponent(v, 0);
    r.add_term(rest, c * factor);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& q) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set_exponent(v, 0);
    r += poly_pow(q, m.exponent(v)).shifted(rest) * c;
  }
  return r;
}

LaurentPoly LaurentPoly::rename(Var from, Var to) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.set_exponent(from, 0);
    n.set_exponent(to, n.exponent(to) + m.exponent(from));
    if (from == to) n = m;
    r.add_term(n, c);
  }
  return r;
}

LaurentPoly poly_arith(ArithKind kind, const LaurentPoly& p, const LaurentPoly& q) {
  switch (kind) {
    case ArithKind::add: return p + q;
    case ArithKind::sub: return p - q;
    case ArithKind::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

LaurentPoly poly_pow(const LaurentPoly& p, int k) {
  if (k < 0) {
    auto term = p.as_term();
    if (!term) throw std::domain_error("not invertible");
    Rational c = 1;
    for (int i = 0; i < -k; ++i) c /= term->second;
    return LaurentPoly(term->first.pow(k), c);
  }
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Rational coefficient_of(const LaurentPoly& p, const Monomial& m) { return p.coefficient(m); }

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Monomial& m) {
  std::string out;
  for (Var v : kAllVars) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_symbol(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + '*' + to_string(m);
    }
  }
  return out;
}

std::string to_string(const RhoElement& e) {
  if (e.q.is_zero()) return to_string(e.p);
  std::string q = "(" + to_string(e.q) + ")*rho";
  if (e.p.is_zero()) return q;
  return "(" + to_string(e.p) + ") + " + q;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expression() {
    LaurentPoly acc;
    bool negate = false;
    skip_space();
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    LaurentPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        LaurentPoly d = factor();
        auto c = d.as_term();
        if (!c) fail("division by a non-monomial");
        acc *= poly_pow(d, -1);
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly factor() {
    LaurentPoly base = primary();
    if (accept('^')) {
      base = poly_pow(base, signed_integer());
    }
    return base;
  }

  int signed_integer() {
    skip_space();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else if (accept('(')) {
      int v = signed_integer();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  LaurentPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("variables are single letters");
      try {
        return LaurentPoly::var(var_from_symbol(c));
      } catch (const std::invalid_argument&) {
        fail(std::string("unknown variable '") + c + "'");
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\"");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// RhoElement

const LaurentPoly& RhoElement::rho_squared() {
  static const LaurentPoly kRhoSq = LaurentPoly::var(Var::y, 2) - LaurentPoly::var(Var::x, 2);
  return kRhoSq;
}

RhoElement& RhoElement::operator+=(const RhoElement& o) {
  p += o.p;
  q += o.q;
  return *this;
}

RhoElement& RhoElement::operator-=(const RhoElement& o) {
  p -= o.p;
  q -= o.q;
  return *this;
}

RhoElement& RhoElement::operator*=(const Rational& c) {
  p *= c;
  q *= c;
  return *this;
}

RhoElement operator*(const RhoElement& a, const RhoElement& b) {
  RhoElement r;
  r.p = a.p * b.p;
  if (!a.q.is_zero() && !b.q.is_zero()) r.p += a.q * b.q * RhoElement::rho_squared();
  if (!b.q.is_zero()) r.q += a.p * b.q;
  if (!a.q.is_zero()) r.q += b.p * a.q;
  return r;
}

RhoElement rho_mul(const RhoElement& e1, const RhoElement& e2) { return e1 * e2; }

RhoElement RhoElement::substitute(Var v, const Rational& value) const {
  return {p.substitute(v, value), q.substitute(v, value)};
}

}  // namespace gramcalc
