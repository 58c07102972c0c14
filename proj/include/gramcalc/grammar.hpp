#pragma once

#include "gramcalc/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gramcalc {

class Series;

/// A set of substitution rules v -> rhs. Variables without a rule are
/// constants. The formal derivative D acts on monomials by the Leibniz rule.
class Grammar {
 public:
  Grammar() = default;
  Grammar(std::string name, std::initializer_list<std::pair<Var, LaurentPoly>> rules);

  void set_rule(Var v, LaurentPoly rhs);
  const std::optional<LaurentPoly>& rule(Var v) const { return rules_[static_cast<std::size_t>(v)]; }
  const std::string& name() const { return name_; }

  /// Named presets: peak, run, h, uv, euler, andre.
  static Grammar preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  /// Literal syntax "x->x*y; y->x^2". Throws std::invalid_argument.
  static Grammar parse(std::string_view rules);

  std::string to_string() const;

 private:
  std::string name_;
  std::array<std::optional<LaurentPoly>, kNumVars> rules_{};
};

LaurentPoly derive(const Grammar& g, const LaurentPoly& f);
LaurentPoly derive_n(const Grammar& g, const LaurentPoly& f, int n);
/// f, D(f), ..., D^n(f).
std::vector<LaurentPoly> derivative_chain(const Grammar& g, const LaurentPoly& f, int n);
bool is_constant(const Grammar& g, const LaurentPoly& f);

/// Gen(f, t) = sum D^k(f) t^k / k! through t^order.
Series gen_series(const Grammar& g, const LaurentPoly& f, int order);

}  // namespace gramcalc
