#include "gramcalc/identities.hpp"

#include "gramcalc/bijection.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/labeling.hpp"
#include "gramcalc/permstat.hpp"
#include "gramcalc/series.hpp"
#include "gramcalc/trees.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace gramcalc {

namespace {

using Witness = std::optional<std::string>;

const LaurentPoly X = LaurentPoly::var(Var::x);
const LaurentPoly Y = LaurentPoly::var(Var::y);
const LaurentPoly A = LaurentPoly::var(Var::a);
const LaurentPoly ONE(1);

const Grammar& peak() {
  static const Grammar g = Grammar::preset("peak");
  return g;
}
const Grammar& run() {
  static const Grammar g = Grammar::preset("run");
  return g;
}

// Brute-force rows, all five statistics per pass, kept for the process lifetime.
const StatTriangle& brute(StatKind kind, int n) {
  static std::map<int, std::array<StatTriangle, 5>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_triangles(n)).first;
  return it->second[static_cast<std::size_t>(kind)];
}

int cap(int n) { return std::min(n, brute_force_bound()); }

BigInt count(StatKind kind, int n, int k) { return brute(kind, n).count(k); }

LaurentPoly biv(StatKind kind, int n) {
  if (kind == StatKind::altrun) return bivariate(brute(kind, n + 1));
  return bivariate(brute(kind, n));
}

// sum_k count(n,k) x^k, with M_0 = 1 for interior peaks.
LaurentPoly uni(StatKind kind, int n) {
  if (kind == StatKind::interiorpeak && n == 0) return ONE;
  return univariate(brute(kind, n));
}

LaurentPoly lambda_uni(int n) {
  LaurentPoly p;
  const auto row = lambda_recurrence_row(n);
  for (int k = 0; k <= n; ++k) p.add_term(Monomial::of(Var::x, k), Rational(row[static_cast<std::size_t>(k)]));
  return p;
}

BigInt binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum_n f(n) t^n / n! for n = 0..order.
Series egf(int order, const std::function<LaurentPoly(int)>& f) {
  std::vector<LaurentPoly> c;
  for (int n = 0; n <= order; ++n) c.push_back(f(n) * (Rational(1) / factorial(n)));
  return Series::from_polys(c);
}

// sum_n f(n) t^(n+1) / (n+1)! for n+1 = 1..order.
Series shifted_egf(int order, const std::function<LaurentPoly(int)>& f) {
  std::vector<LaurentPoly> c{LaurentPoly{}};
  for (int n = 0; n + 1 <= order; ++n) c.push_back(f(n) * (Rational(1) / factorial(n + 1)));
  return Series::from_polys(c);
}

Series constant(int order, const LaurentPoly& p) { return Series::constant(order, RhoElement(p)); }

// Univariate kernels with rho^2 = 1 - x.
Series uni_kernel(int order, int parity) {
  std::vector<LaurentPoly> c(static_cast<std::size_t>(order) + 1);
  for (int j = parity; j <= order; j += 2)
    c[static_cast<std::size_t>(j)] = poly_pow(ONE - X, j / 2) * (Rational(1) / factorial(j));
  return Series::from_polys(c);
}

std::string show(const LaurentPoly& p) {
  std::string s = to_string(p);
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

std::string show(const RhoElement& e) {
  std::string s = to_string(e);
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

Witness compare(const std::string& where, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return where + ": " + show(lhs) + " != " + show(rhs);
}

Witness compare(const std::string& where, const Series& lhs, const Series& rhs) {
  if (lhs.order() != rhs.order()) return where + ": order mismatch";
  for (int n = 0; n <= lhs.order(); ++n)
    if (lhs[n] != rhs[n]) return where + ", t^" + std::to_string(n) + ": " + show(lhs[n]) + " != " + show(rhs[n]);
  return std::nullopt;
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

struct Entry {
  std::string id;
  std::string description;
  std::function<Witness(const VerifyParams&, std::string&)> run;
};

// ---- peaks

Witness check_lw1(const VerifyParams& p, std::string& detail) {
  detail = "grammar series to order " + std::to_string(p.order);
  const Series gx = gen_series(peak(), X, p.order);
  const Series gy = gen_series(peak(), Y, p.order);
  return compare("Gen(x)^2 vs Gen(y)^2 + x^2 - y^2", gx * gx, gy * gy + constant(p.order, X * X - Y * Y));
}

Witness check_ww(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max) - 1;
  detail = "brute force, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    LaurentPoly rhs;
    for (int k = 0; k <= n; ++k)
      rhs += biv(StatKind::exteriorpeak, k) * biv(StatKind::exteriorpeak, n - k) * Rational(binomial(n, k));
    if (auto w = compare(at_n(n), biv(StatKind::exteriorpeak, n + 1), rhs)) return w;
  }
  return std::nullopt;
}

Witness check_wl(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max) - 1;
  detail = "brute force, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    LaurentPoly rhs;
    for (int k = 0; k <= n; ++k)
      rhs += biv(StatKind::leftpeak, k) * biv(StatKind::leftpeak, n - k) * Rational(binomial(n, k));
    if (auto w = compare(at_n(n), biv(StatKind::exteriorpeak, n + 1), rhs)) return w;
  }
  return std::nullopt;
}

Witness check_ode_system(const VerifyParams& p, std::string& detail) {
  detail = "closed forms to order " + std::to_string(p.order);
  const int m = p.order - 1;
  const Series L = closed_form("genx", p.order);
  const Series W = closed_form("geny", p.order);
  if (auto w = compare("L' = L W", ddt(L), (L * W).truncated(m))) return w;
  if (auto w = compare("W' = L^2", ddt(W), (L * L).truncated(m))) return w;
  if (L[0] != RhoElement(X) || W[0] != RhoElement(Y)) return std::string("boundary values");
  return std::nullopt;
}

Witness check_ode_single(const VerifyParams& p, std::string& detail) {
  detail = "closed forms to order " + std::to_string(p.order) + ", L equation squared";
  const int m = p.order - 1;
  const Series L = closed_form("genx", p.order);
  const Series W = closed_form("geny", p.order);
  const Series c = constant(p.order, X * X - Y * Y);
  if (auto w = compare("W' = W^2 + x^2 - y^2", ddt(W), (W * W + c).truncated(m))) return w;
  const Series dl = ddt(L);
  const Series l2 = L * L;
  return compare("L'^2 = L^2 (L^2 - x^2 + y^2)", dl * dl, (l2 * (l2 - c)).truncated(m));
}

Witness check_bg(const VerifyParams& p, std::string& detail) {
  detail = "closed form vs grammar to order " + std::to_string(p.order);
  return compare("Gen(x^-1)", closed_form("bg", p.order), gen_series(peak(), LaurentPoly::var(Var::x, -1), p.order));
}

Witness check_x2n(const VerifyParams& p, std::string& detail) {
  detail = "D^j(x^-1) for j <= " + std::to_string(p.order);
  const LaurentPoly x_inv = LaurentPoly::var(Var::x, -1);
  const LaurentPoly rho_sq = Y * Y - X * X;
  const auto chain = derivative_chain(peak(), x_inv, p.order);
  for (int j = 0; j <= p.order; ++j) {
    const LaurentPoly expected = j % 2 == 0 ? x_inv * poly_pow(rho_sq, j / 2) : -(x_inv * Y * poly_pow(rho_sq, j / 2));
    if (auto w = compare("j=" + std::to_string(j), chain[static_cast<std::size_t>(j)], expected)) return w;
  }
  return std::nullopt;
}

Witness check_genx(const VerifyParams& p, std::string& detail) {
  const int top = std::min(cap(p.n_max), p.order);
  detail = "closed form vs grammar to order " + std::to_string(p.order) + ", vs enumeration to order " +
           std::to_string(top);
  const Series closed = closed_form("genx", p.order);
  if (auto w = compare("vs grammar", closed, gen_series(peak(), X, p.order))) return w;
  if (auto w = compare("Gen(x) Gen(x^-1)", closed * closed_form("bg", p.order), constant(p.order, ONE))) return w;
  return compare("vs enumeration", closed.truncated(top), egf(top, [](int n) { return biv(StatKind::leftpeak, n); }));
}

Witness check_xy(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumerated L and W series to order " + std::to_string(top) + ", cross-multiplied";
  const Series L = egf(top, [](int n) { return biv(StatKind::leftpeak, n); });
  const Series W = egf(top, [](int n) { return biv(StatKind::exteriorpeak, n); });
  return compare("Gen'(x) = Gen(x) Gen(y)", ddt(L), (L * W).truncated(top - 1));
}

Witness check_x1y3(const VerifyParams& p, std::string& detail) {
  detail = "closed form vs grammar to order " + std::to_string(p.order);
  return compare("Gen(x^-1 y)", closed_form("gen_xinv_y", p.order),
                 gen_series(peak(), LaurentPoly::var(Var::x, -1) * Y, p.order));
}

Witness check_yxt(const VerifyParams& p, std::string& detail) {
  detail = "grammar Gen(y), Gen(x) against closed Gen(x^-1 y) to order " + std::to_string(p.order);
  return compare("Gen(y) = Gen(x) Gen(x^-1 y)", gen_series(peak(), Y, p.order),
                 gen_series(peak(), X, p.order) * closed_form("gen_xinv_y", p.order));
}

Witness check_my(const VerifyParams& p, std::string& detail) {
  const int top = std::min(cap(p.n_max), p.order);
  detail = "enumerated M series to order " + std::to_string(top) + "; closed form vs grammar to order " +
           std::to_string(p.order);
  const Series m = egf(top, [](int n) { return biv(StatKind::interiorpeak, n); });
  if (auto w = compare("M vs 1 - y + Gen(y)", m, closed_form("m_bivariate", p.order).truncated(top))) return w;
  return compare("closed vs grammar", closed_form("m_bivariate", p.order),
                 constant(p.order, ONE - Y) + gen_series(peak(), Y, p.order));
}

Witness check_gessel(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumerated L_n(x) to order " + std::to_string(top) + ", cross-multiplied";
  const Series L = egf(top, [](int n) { return uni(StatKind::leftpeak, n); });
  return compare("L(x,t) (cosh - sinh/rho) = 1", L * (uni_kernel(top, 0) - uni_kernel(top, 1)), constant(top, ONE));
}

Witness check_david_barton(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumerated M_n to order " + std::to_string(top) + ", univariate and bivariate, cross-multiplied";
  const Series Cu = uni_kernel(top, 0);
  const Series Su = uni_kernel(top, 1);
  const Series Mu = egf(top, [](int n) { return uni(StatKind::interiorpeak, n); });
  if (auto w = compare("univariate", Mu * (Cu - Su), Cu)) return w;
  const Series C = cosh_kernel(top);
  const Series S = sinh_kernel(top);
  const Series M = egf(top, [](int n) { return biv(StatKind::interiorpeak, n); });
  // The sinh coefficient in the numerator is x^2 - y; with 1 - y the t^1 term already fails.
  return compare("bivariate", M * (C - RhoElement(Y) * S), C + RhoElement(X * X - Y) * S);
}

Witness check_glw3(const VerifyParams& p, std::string& detail) {
  const int top = std::min(cap(p.n_max), p.order);
  detail = "enumerated L_n(x), W_n(x) to order " + std::to_string(top);
  const Series lhs = egf(top, [](int n) { return uni(StatKind::leftpeak, n); });
  const Series inner = shifted_egf(top, [](int n) { return uni(StatKind::exteriorpeak, n); });
  return compare("exp formula", lhs, series_exp(inner));
}

Witness check_lw_sp(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "every permutation, n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    for_each_permutation(n, [&](const Permutation& s) {
      if (!w && lw_block_peak_sum(s) != stat(StatKind::leftpeak, s))
        w = "sigma=" + s.to_string() + " (" + to_string(decompose(DecompositionKind::LW, s)) + ")";
    });
    if (w) return w;
  }
  return std::nullopt;
}

// ---- up-down runs

Witness check_thm_ma(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "grammar vs enumeration, n <= " + std::to_string(top);
  for (int n = 0; n <= top; ++n)
    if (auto w = compare(at_n(n), derive_n(run(), A, n), A * biv(StatKind::updownrun, n))) return w;
  return std::nullopt;
}

Witness check_an_r(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "recurrence vs enumeration, n <= " + std::to_string(top);
  for (int n = 0; n <= top; ++n) {
    const auto row = lambda_recurrence_row(n);
    for (int k = 0; k <= n + 1; ++k) {
      const BigInt rec = k <= n ? row[static_cast<std::size_t>(k)] : BigInt(0);
      if (rec != count(StatKind::updownrun, n, k))
        return at_n(n) + ", k=" + std::to_string(k) + ": " + rec.get_str() + " != " +
               count(StatKind::updownrun, n, k).get_str();
    }
  }
  return std::nullopt;
}

Witness check_ra(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max) - 1;
  detail = "enumerated R_n (from S_{n+1}) vs recurrence Lambda to order " + std::to_string(top);
  const Series R = egf(top, [](int n) { return biv(StatKind::altrun, n).substitute(Var::y, 1); });
  const Series L = egf(top, lambda_uni);
  return compare("R = Lambda^2", R, L * L);
}

Witness check_al1(const VerifyParams& p, std::string& detail) {
  const int top = std::min(cap(p.n_max), p.order);
  detail = "recurrence Lambda vs enumerated L to order " + std::to_string(top);
  const Series inner = shifted_egf(top, [](int n) {
    LaurentPoly q;
    const LaurentPoly l = uni(StatKind::leftpeak, n);
    for (const auto& [m, c] : l.terms())
      q.add_term(Monomial::of(Var::x, 2 * m.exponent(Var::x) + 1), c);
    return q;
  });
  return compare("exp formula", egf(top, lambda_uni), series_exp(inner));
}

Witness check_al_decomposition(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "aggregate over S_n, n <= " + std::to_string(top);
  for (int n = 0; n <= top; ++n) {
    LaurentPoly sum;
    for_each_permutation(n, [&](const Permutation& s) { sum += al_block_weight(s); });
    if (auto w = compare(at_n(n), sum, lambda_uni(n))) return w;
  }
  return std::nullopt;
}

Witness check_gen_at(const VerifyParams& p, std::string& detail) {
  detail = "grammar Gen(a) vs closed Gen(x), Gen(y) to order " + std::to_string(p.order);
  return compare("(x+y) Gen(a)", RhoElement(X + Y) * gen_series(run(), A, p.order),
                 RhoElement(A) * (closed_form("genx", p.order) + closed_form("geny", p.order)));
}

Witness check_alw(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumeration, n <= " + std::to_string(top);
  for (int n = 0; n <= top; ++n)
    if (auto w = compare(at_n(n), (X + Y) * biv(StatKind::updownrun, n),
                         biv(StatKind::leftpeak, n) + biv(StatKind::exteriorpeak, n)))
      return w;
  return std::nullopt;
}

Witness check_la(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumeration, 1 <= n <= " + std::to_string(top) + ", 0 <= k <= n/2";
  for (int n = 1; n <= top; ++n)
    for (int k = 0; k <= n / 2; ++k)
      if (count(StatKind::leftpeak, n, k) !=
          count(StatKind::updownrun, n, 2 * k) + count(StatKind::updownrun, n, 2 * k + 1))
        return at_n(n) + ", k=" + std::to_string(k);
  return std::nullopt;
}

Witness check_ma(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "enumeration, 1 <= n <= " + std::to_string(top) + ", 0 <= k <= (n-1)/2";
  for (int n = 1; n <= top; ++n)
    for (int k = 0; k <= (n - 1) / 2; ++k)
      if (count(StatKind::interiorpeak, n, k) !=
          count(StatKind::updownrun, n, 2 * k + 1) + count(StatKind::updownrun, n, 2 * k + 2))
        return at_n(n) + ", k=" + std::to_string(k);
  return std::nullopt;
}

// M(n,k) by enumeration within the bound, otherwise read off D^n(y).
Rational m_count(int n, int k) {
  if (n <= brute_force_bound() && n <= 9) return Rational(count(StatKind::interiorpeak, n, k));
  return coefficient_of(derive_n(peak(), Y, n), Monomial{{Var::x, 2 * k + 2}, {Var::y, n - 2 * k - 1}});
}

Witness check_am(const VerifyParams& p, std::string& detail) {
  const int top = std::max(p.n_max, 10);
  detail = "1 <= n <= " + std::to_string(top) + ", Lambda by recurrence, M by enumeration up to n=" +
           std::to_string(std::min(9, brute_force_bound())) + " then by grammar";
  for (int n = 1; n <= top; ++n) {
    LaurentPoly rhs;
    for (int k = 0; k <= (n - 1) / 2; ++k)
      rhs += poly_pow(X * Rational(2), k) * poly_pow(ONE + X, n - 1 - k) * m_count(n, k);
    if (auto w = compare(at_n(n), lambda_uni(n) * poly_pow(LaurentPoly(2), n - 1), X * rhs)) return w;
  }
  return std::nullopt;
}

Witness check_uv(const VerifyParams& p, std::string& detail) {
  const int top = std::max(p.n_max, 9);
  detail = "1 <= n <= " + std::to_string(top);
  const Grammar uv = Grammar::preset("uv");
  const LaurentPoly u = LaurentPoly::var(Var::u);
  const LaurentPoly v = LaurentPoly::var(Var::v);
  for (int n = 1; n <= top; ++n) {
    LaurentPoly rhs;
    for (int k = 0; k <= (n - 1) / 2; ++k)
      rhs += poly_pow(u, n - 1 - 2 * k) * poly_pow(v, 2 * k + 2) *
             (m_count(n, k) / Rational(BigInt(1) << static_cast<unsigned>(n - 1 - k)));
    if (auto w = compare(at_n(n), derive_n(uv, u, n), rhs)) return w;
  }
  return std::nullopt;
}

Witness check_dam(const VerifyParams& p, std::string& detail) {
  const int top = std::max(p.n_max, p.order);
  detail = "grammar, n <= " + std::to_string(top) + ", cross-multiplied";
  const auto da = derivative_chain(run(), A, top);
  const auto ds = derivative_chain(run(), X + Y, top);
  for (int n = 0; n <= top; ++n)
    if (auto w = compare(at_n(n), (X + Y) * da[static_cast<std::size_t>(n)], A * ds[static_cast<std::size_t>(n)]))
      return w;
  return std::nullopt;
}

Witness check_sf(const VerifyParams& p, std::string& detail) {
  detail = "recurrence Lambda_n(x) to order " + std::to_string(p.order) + ", cross-multiplied at a=y=1";
  const Series L = egf(p.order, lambda_uni);
  return compare("Lambda(x,t) den = num", L * closed_form("stanley_den", p.order), closed_form("stanley_num", p.order));
}

Witness check_gen_a_closed(const VerifyParams& p, std::string& detail) {
  detail = "grammar Gen(a) to order " + std::to_string(p.order) + ", cross-multiplied";
  return compare("Gen(a) den = num", gen_series(run(), A, p.order) * closed_form("gena_den", p.order),
                 closed_form("gena_num", p.order));
}

Witness check_grammar_h(const VerifyParams& p, std::string& detail) {
  const int top = std::max(p.n_max, 10);
  detail = "x D_H^n(a) = a D_G^n(x), n <= " + std::to_string(top);
  const Grammar h = Grammar::preset("h");
  const auto dh = derivative_chain(h, A, top);
  const auto dg = derivative_chain(peak(), X, top);
  for (int n = 0; n <= top; ++n)
    if (auto w = compare(at_n(n), X * dh[static_cast<std::size_t>(n)], A * dg[static_cast<std::size_t>(n)]))
      return w;
  return std::nullopt;
}

Witness check_peak_interpretations(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "grammar vs enumeration, n <= " + std::to_string(top);
  const auto dx = derivative_chain(peak(), X, top);
  const auto dy = derivative_chain(peak(), Y, top);
  for (int n = 0; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (auto w = compare("D^n(x), " + at_n(n), dx[i], biv(StatKind::leftpeak, n))) return w;
    if (auto w = compare("D^n(y) vs W, " + at_n(n), dy[i], biv(StatKind::exteriorpeak, n))) return w;
    if (n >= 1)
      if (auto w = compare("D^n(y) vs M, " + at_n(n), dy[i], biv(StatKind::interiorpeak, n))) return w;
  }
  return std::nullopt;
}

Witness check_altrun(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max) - 1;
  detail = "grammar vs enumeration over S_{n+1}, n <= " + std::to_string(top);
  const auto d = derivative_chain(run(), A * A, top);
  for (int n = 0; n <= top; ++n)
    if (auto w = compare(at_n(n), d[static_cast<std::size_t>(n)], A * A * biv(StatKind::altrun, n))) return w;
  return std::nullopt;
}

// ---- labelings

Witness check_a_labeling(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "every permutation, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    LaurentPoly sum;
    for_each_permutation(n, [&](const Permutation& s) {
      const LaurentPoly weight = label_weight(a_labeling(s));
      const int r = stat(StatKind::updownrun, s);
      if (!w && weight != LaurentPoly(Monomial{{Var::a, 1}, {Var::x, r}, {Var::y, n - r}}))
        w = "sigma=" + s.to_string() + ": weight " + show(weight);
      sum += weight;
    });
    if (w) return w;
    if (auto w2 = compare("sum, " + at_n(n), sum, derive_n(run(), A, n))) return w2;
  }
  return std::nullopt;
}

Witness check_l_labeling(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "every permutation, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    for_each_permutation(n, [&](const Permutation& s) {
      const int m = stat(StatKind::leftpeak, s);
      if (!w && label_weight(l_labeling(s)) != LaurentPoly(Monomial{{Var::x, 2 * m + 1}, {Var::y, n - 2 * m}}))
        w = "sigma=" + s.to_string();
      if (!w && stat(StatKind::updownrun, s.inserted(n + 1)) != 2 * m + 1) w = "sigma=" + s.to_string() + " (n+1)";
    });
    if (w) return w;
  }
  return std::nullopt;
}

Witness check_thm_ud(const VerifyParams& p, std::string& detail) {
  const int top = cap(p.n_max);
  detail = "every permutation and insertion position, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    for_each_permutation(n, [&](const Permutation& s) {
      if (w) return;
      for (int k = 1; k <= n + 1; ++k)
        if (!insert_consistency(s, k).ok) {
          w = "sigma=" + s.to_string() + ", k=" + std::to_string(k);
          return;
        }
    });
    if (w) return w;
  }
  return std::nullopt;
}

// ---- trees and bijections

int tree_cap(int n) { return std::min(n, tree_bound()); }

bool transported(BijectionKind kind, const Permutation& s, const IncreasingTree& t) {
  switch (kind) {
    case BijectionKind::updown: return stat(StatKind::updownrun, s) == even_nonroot_count(t);
    case BijectionKind::leftpeak: return even_vertex_count(t) == 2 * stat(StatKind::leftpeak, s) + 1;
    case BijectionKind::exterior:
    case BijectionKind::unified: return stat(StatKind::exteriorpeak, s) == (even_nonroot_count(t) + 1) / 2;
  }
  return false;
}

Witness check_bijection(BijectionKind kind, const VerifyParams& p, std::string& detail) {
  const int top = tree_cap(p.n_max);
  detail = "injective onto all n! trees, statistic transport, round trip, 1 <= n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    std::set<IncreasingTree> image;
    for_each_permutation(n, [&](const Permutation& s) {
      if (w) return;
      try {
        const IncreasingTree t = phi(kind, s);
        image.insert(t);
        if (!transported(kind, s, t)) w = "transport fails at sigma=" + s.to_string() + " -> " + t.to_string();
        else if (phi_inverse(kind, t) != s) w = "round trip fails at sigma=" + s.to_string();
      } catch (const std::logic_error& e) {
        w = e.what();
      }
    });
    if (w) return w;
    if (image.size() != static_cast<std::size_t>(factorial(n).get_num().get_ui()))
      return at_n(n) + ": " + std::to_string(image.size()) + " distinct trees";
  }
  return std::nullopt;
}

Witness check_unified(const VerifyParams& p, std::string& detail) {
  const int top = tree_cap(p.n_max);
  detail = "unified, left-peak and exterior trees equal the up-down tree, n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    for_each_permutation(n, [&](const Permutation& s) {
      if (w) return;
      const IncreasingTree t = phi(BijectionKind::updown, s);
      for (auto k : {BijectionKind::unified, BijectionKind::leftpeak, BijectionKind::exterior})
        if (phi(k, s) != t) {
          w = std::string(bijection_name(k)) + " differs at sigma=" + s.to_string();
          return;
        }
    });
    if (w) return w;
  }
  return std::nullopt;
}

Witness check_down_up(const VerifyParams& p, std::string& detail) {
  const int top = tree_cap(p.n_max);
  detail = "down-up iff even tree, count = Lambda(n,n), n <= " + std::to_string(top);
  for (int n = 1; n <= top; ++n) {
    Witness w;
    BigInt even = 0;
    for_each_permutation(n, [&](const Permutation& s) {
      const bool e = is_even_tree(phi(BijectionKind::updown, s));
      if (!w && e != is_down_up(s)) w = "sigma=" + s.to_string();
      even += e ? 1 : 0;
    });
    if (w) return w;
    if (even != lambda_recurrence_row(n)[static_cast<std::size_t>(n)]) return at_n(n) + ": " + even.get_str();
  }
  return std::nullopt;
}

Witness check_tree_sums(const VerifyParams& p, std::string& detail) {
  const int top = tree_cap(p.n_max);
  detail = "parity, L and W weight sums vs grammar, even-tree count, n <= " + std::to_string(top);
  const auto da = derivative_chain(run(), A, top);
  const auto dx = derivative_chain(peak(), X, top);
  const auto dy = derivative_chain(peak(), Y, top);
  for (int n = 0; n <= top; ++n) {
    LaurentPoly parity;
    LaurentPoly l;
    LaurentPoly w;
    BigInt even = 0;
    enumerate_trees(n, [&](const IncreasingTree& t) {
      parity += tree_weight(t, TreeScheme::parity);
      l += tree_weight(t, TreeScheme::L);
      w += tree_weight(t, TreeScheme::W);
      even += is_even_tree(t) ? 1 : 0;
    });
    const auto i = static_cast<std::size_t>(n);
    if (auto r = compare("parity, " + at_n(n), parity, da[i])) return r;
    if (auto r = compare("L, " + at_n(n), l, dx[i])) return r;
    if (auto r = compare("W, " + at_n(n), w, dy[i])) return r;
    if (even != lambda_recurrence_row(n)[i]) return "even trees, " + at_n(n);
  }
  return std::nullopt;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"eq-LW-1", "Gen(x)^2 = Gen(y)^2 + x^2 - y^2", check_lw1},
      {"eq-WW", "W_{n+1} = sum C(n,k) W_k W_{n-k}", check_ww},
      {"eq-WL", "W_{n+1} = sum C(n,k) L_k L_{n-k}", check_wl},
      {"ode-system", "L' = L W, W' = L^2 with L(0) = x, W(0) = y", check_ode_system},
      {"ode-single", "W' = W^2 + x^2 - y^2 and L'^2 = L^2 (L^2 - x^2 + y^2)", check_ode_single},
      {"eq-bg", "closed form of Gen(x^-1)", check_bg},
      {"x2n", "D^(2n)(x^-1) = x^-1 rho^(2n), D^(2n+1)(x^-1) = -x^-1 y rho^(2n)", check_x2n},
      {"eq-Genx", "closed form of Gen(x)", check_genx},
      {"eq-xy", "Gen'(x) = Gen(x) Gen(y)", check_xy},
      {"eq-x-1-y-3", "closed form of Gen(x^-1 y)", check_x1y3},
      {"eq-yxt", "Gen(y) = Gen(x) Gen(x^-1 y)", check_yxt},
      {"eq-M-y", "M(x,y,t) = 1 - y + Gen(y)", check_my},
      {"gessel", "univariate left-peak generating function", check_gessel},
      {"david-barton", "interior-peak generating function, both forms", check_david_barton},
      {"eq-GLW-3", "sum L_n(x) t^n/n! = exp(sum W_n(x) t^(n+1)/(n+1)!)", check_glw3},
      {"eq-LW-sp", "leftpeak(sigma) = sum of exterior peaks of trimmed LW blocks", check_lw_sp},
      {"thm-ma", "D^n(a) = a Lambda_n(x,y)", check_thm_ma},
      {"eq-an-r", "three-term recurrence for Lambda(n,k)", check_an_r},
      {"eq-RA", "R(x,t) = Lambda(x,t)^2", check_ra},
      {"eq-AL-1", "sum Lambda_n(x) t^n/n! = exp(sum x L_n(x^2) t^(n+1)/(n+1)!)", check_al1},
      {"al-decomposition", "AL block weights sum to Lambda_n(x)", check_al_decomposition},
      {"eq-gen-at", "(x+y) Gen(a) = a (Gen(x) + Gen(y))", check_gen_at},
      {"eq-A-L-W", "(x+y) Lambda_n = L_n + W_n", check_alw},
      {"eq-LA", "L(n,k) = Lambda(n,2k) + Lambda(n,2k+1)", check_la},
      {"eq-MA", "M(n,k) = Lambda(n,2k+1) + Lambda(n,2k+2)", check_ma},
      {"eq-AM", "2^(n-1) Lambda_n(x) = x sum M(n,k) (2x)^k (1+x)^(n-1-k)", check_am},
      {"eq-UV", "D^n(u) under u -> v^2, v -> uv/2", check_uv},
      {"eq-DAM", "(x+y) D^n(a) = a D^n(x+y)", check_dam},
      {"eq-SF", "Stanley's formula, cross-multiplied", check_sf},
      {"gen-a-closed", "closed form of Gen(a), cross-multiplied", check_gen_a_closed},
      {"grammar-H", "x D_H^n(a) = a D_G^n(x)", check_grammar_h},
      {"peak-interpretations", "D^n(x) = L_n, D^n(y) = W_n = M_n", check_peak_interpretations},
      {"altrun-grammar", "D^n(a^2) = a^2 R_n(x,y)", check_altrun},
      {"a-labeling", "A-labeling weight a x^r y^(n-r), summing to D^n(a)", check_a_labeling},
      {"l-labeling", "L-labeling weight and runs of sigma (n+1)", check_l_labeling},
      {"thm-ud", "insertion applies one rule to one label", check_thm_ud},
      {"thm-bijection", "up-down runs to even nonroot vertices",
       [](const VerifyParams& p, std::string& d) { return check_bijection(BijectionKind::updown, p, d); }},
      {"thm-L-I", "left peaks to 2m+1 even vertices",
       [](const VerifyParams& p, std::string& d) { return check_bijection(BijectionKind::leftpeak, p, d); }},
      {"thm-W-I", "exterior peaks k = floor((j+1)/2)",
       [](const VerifyParams& p, std::string& d) { return check_bijection(BijectionKind::exterior, p, d); }},
      {"unified-agreement", "unified reflection agrees with the other maps", check_unified},
      {"down-up-even-trees", "down-up permutations to even trees", check_down_up},
      {"tree-sums", "tree weight sums match the grammars", check_tree_sums},
  };
  return entries;
}

const Entry& find(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown identity \"" + std::string(id) + "\"");
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view identity_description(std::string_view id) { return find(id).description; }

IdentityCheck verify(std::string_view id, const VerifyParams& params) {
  const Entry& e = find(id);
  if (params.n_max < 1 || params.order < 1) throw std::invalid_argument("n_max and order must be positive");
  IdentityCheck r{e.id, params, false, {}, {}};
  try {
    const Witness w = e.run(params, r.detail);
    r.pass = !w;
    if (w) r.witness = *w;
  } catch (const std::exception& ex) {
    r.witness = std::string("exception: ") + ex.what();
  }
  return r;
}

std::vector<IdentityCheck> verify_all(const VerifyParams& params) {
  std::vector<IdentityCheck> out;
  for (const auto& id : identity_ids()) out.push_back(verify(id, params));
  return out;
}

}  // namespace gramcalc
