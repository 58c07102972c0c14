#include "gramcalc/json_io.hpp"

#include <stdexcept>

namespace gramcalc {

namespace {

Json count_json(const BigInt& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

BigInt count_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long>());
}

}  // namespace

Json to_json(const Monomial& m) {
  Json j = Json::object();
  for (Var v : kAllVars)
    if (m.exponent(v) != 0) j[std::string(1, var_symbol(v))] = m.exponent(v);
  return j;
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  for (const auto& [name, e] : j.items()) {
    if (name.size() != 1) throw std::invalid_argument("bad variable name: " + name);
    m.set_exponent(var_from_symbol(name[0]), e.get<int>());
  }
  return m;
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms())
    j.push_back({{"exp", to_json(m)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j) {
    Rational c(BigInt(term.at("num").get<std::string>()), BigInt(term.at("den").get<std::string>()));
    c.canonicalize();
    p.add_term(monomial_from_json(term.at("exp")), c);
  }
  return p;
}

Json to_json(const RhoElement& e) { return {{"p", to_json(e.p)}, {"q", to_json(e.q)}}; }

RhoElement rho_from_json(const Json& j) { return {poly_from_json(j.at("p")), poly_from_json(j.at("q"))}; }

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  for (int n = 0; n <= s.order(); ++n) {
    Json c = to_json(s[n]);
    coeffs.push_back({{"n", n}, {"p", c["p"]}, {"q", c["q"]}});
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

Series series_from_json(const Json& j) {
  Series s(j.at("order").get<int>());
  for (const auto& c : j.at("coeffs")) s[c.at("n").get<int>()] = rho_from_json(c);
  return s;
}

Json to_json(const StatTriangle& t) {
  Json rows = Json::array();
  for (int k = 0; k < static_cast<int>(t.counts.size()); ++k)
    rows.push_back({{"n", t.n}, {"k", k}, {"count", count_json(t.counts[static_cast<std::size_t>(k)])}});
  return {{"stat", std::string(stat_name(t.kind))}, {"n", t.n}, {"rows", rows}};
}

StatTriangle triangle_from_json(const Json& j) {
  StatTriangle t;
  t.kind = stat_from_name(j.at("stat").get<std::string>());
  t.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    const auto k = static_cast<std::size_t>(row.at("k").get<int>());
    if (t.counts.size() <= k) t.counts.resize(k + 1);
    t.counts[k] = count_from_json(row.at("count"));
  }
  return t;
}

Json to_json(const Permutation& sigma) { return sigma.values(); }

Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

Json to_json(const IncreasingTree& t) { return {{"n", t.size()}, {"parent", t.parents()}}; }

IncreasingTree tree_from_json(const Json& j) {
  IncreasingTree t(j.at("parent").get<std::vector<int>>());
  if (j.contains("n") && j["n"].get<int>() != t.size()) throw std::invalid_argument("tree size mismatch");
  return t;
}

Json to_json(const IdentityCheck& c) {
  return {{"id", c.id},           {"n_max", c.params.n_max}, {"order", c.params.order},
          {"pass", c.pass},       {"witness", c.witness},    {"detail", c.detail}};
}

IdentityCheck check_from_json(const Json& j) {
  IdentityCheck c;
  c.id = j.at("id").get<std::string>();
  c.params.n_max = j.at("n_max").get<int>();
  c.params.order = j.at("order").get<int>();
  c.pass = j.at("pass").get<bool>();
  c.witness = j.at("witness").get<std::string>();
  c.detail = j.at("detail").get<std::string>();
  return c;
}

}  // namespace gramcalc
