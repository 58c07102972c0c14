#include "gramcalc/grammar.hpp"

#include "gramcalc/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gramcalc {

Grammar::Grammar(std::string name, std::initializer_list<std::pair<Var, LaurentPoly>> rules)
    : name_(std::move(name)) {
  for (const auto& [v, rhs] : rules) set_rule(v, rhs);
}

void Grammar::set_rule(Var v, LaurentPoly rhs) { rules_[static_cast<std::size_t>(v)] = std::move(rhs); }

const std::vector<std::string>& Grammar::preset_names() {
  static const std::vector<std::string> kNames{"peak", "run", "h", "uv", "euler", "andre"};
  return kNames;
}

Grammar Grammar::preset(std::string_view name) {
  const auto X = LaurentPoly::var(Var::x);
  const auto Y = LaurentPoly::var(Var::y);
  const auto A = LaurentPoly::var(Var::a);
  const auto U = LaurentPoly::var(Var::u);
  const auto V = LaurentPoly::var(Var::v);
  if (name == "peak") return Grammar("peak", {{Var::x, X * Y}, {Var::y, X * X}});
  if (name == "run") return Grammar("run", {{Var::a, A * X}, {Var::x, X * Y}, {Var::y, X * X}});
  if (name == "h") return Grammar("h", {{Var::a, A * Y}, {Var::x, X * Y}, {Var::y, X * X}});
  if (name == "uv") return Grammar("uv", {{Var::u, V * V}, {Var::v, U * V * Rational(1, 2)}});
  if (name == "euler") return Grammar("euler", {{Var::x, X * Y}, {Var::y, X * Y}});
  if (name == "andre") return Grammar("andre", {{Var::x, X * Y}, {Var::y, X}});
  throw std::invalid_argument("unknown grammar preset \"" + std::string(name) + "\"");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Grammar Grammar::parse(std::string_view rules) {
  Grammar g;
  g.name_ = "inline";
  bool any = false;
  while (!rules.empty()) {
    const auto semi = rules.find(';');
    std::string_view rule = trim(rules.substr(0, semi));
    rules = semi == std::string_view::npos ? std::string_view{} : rules.substr(semi + 1);
    if (rule.empty()) continue;
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("rule \"" + std::string(rule) + "\" has no '->'");
    const auto lhs = trim(rule.substr(0, arrow));
    if (lhs.size() != 1) throw std::invalid_argument("rule left side must be one variable: \"" + std::string(rule) + "\"");
    const Var v = var_from_symbol(lhs.front());
    if (g.rule(v)) throw std::invalid_argument(std::string("duplicate rule for ") + lhs.front());
    g.set_rule(v, parse_poly(rule.substr(arrow + 2)));
    any = true;
  }
  if (!any) throw std::invalid_argument("empty grammar");
  return g;
}

std::string Grammar::to_string() const {
  std::string out;
  for (Var v : kAllVars) {
    const auto& r = rule(v);
    if (!r) continue;
    if (!out.empty()) out += "; ";
    out += var_symbol(v);
    out += "->" + gramcalc::to_string(*r);
  }
  return out;
}

LaurentPoly derive(const Grammar& g, const LaurentPoly& f) {
  LaurentPoly result;
  for (const auto& [m, c] : f.terms()) {
    for (Var v : kAllVars) {
      const int e = m.exponent(v);
      const auto& rhs = g.rule(v);
      if (e == 0 || !rhs) continue;
      // D(v^e * rest) contributes e * v^(e-1) * D(v) * rest.
      Monomial rest = m;
      rest.set_exponent(v, e - 1);
      const Rational factor = c * e;
      for (const auto& [rm, rc] : rhs->terms()) result.add_term(rest * rm, factor * rc);
    }
  }
  return result;
}

LaurentPoly derive_n(const Grammar& g, const LaurentPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("derivative order must be nonnegative");
  LaurentPoly cur = f;
  for (int i = 0; i < n && !cur.is_zero(); ++i) cur = derive(g, cur);
  return cur;
}

std::vector<LaurentPoly> derivative_chain(const Grammar& g, const LaurentPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("derivative order must be nonnegative");
  std::vector<LaurentPoly> chain;
  chain.reserve(static_cast<std::size_t>(n) + 1);
  chain.push_back(f);
  for (int i = 0; i < n; ++i) chain.push_back(derive(g, chain.back()));
  return chain;
}

bool is_constant(const Grammar& g, const LaurentPoly& f) { return derive(g, f).is_zero(); }

Series gen_series(const Grammar& g, const LaurentPoly& f, int order) {
  const auto chain = derivative_chain(g, f, order);
  std::vector<LaurentPoly> egf;
  egf.reserve(chain.size());
  Rational fact = 1;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    egf.push_back(chain[k] * Rational(1 / fact));
  }
  return Series::from_polys(egf);
}

}  // namespace gramcalc
