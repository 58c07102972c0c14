#include "gramcalc/permstat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gramcalc {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(values_.size()) + ": " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size()) return Permutation();
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw std::invalid_argument("malformed permutation \"" + std::string(text) + "\"");
    values.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("malformed permutation \"" + std::string(text) + "\"");
    ++pos;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inserted(int k) const {
  const int n = size();
  if (k < 1 || k > n + 1) throw std::out_of_range("insertion position " + std::to_string(k) + " outside 1.." + std::to_string(n + 1));
  std::vector<int> v = values_;
  v.insert(v.begin() + (k - 1), n + 1);
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

Permutation Permutation::restricted(int m) const {
  Permutation p;
  for (int v : values_)
    if (v <= m) p.values_.push_back(v);
  return p;
}

int Permutation::position_of_max() const {
  const auto it = std::max_element(values_.begin(), values_.end());
  if (it == values_.end()) throw std::invalid_argument("empty permutation has no maximum");
  return static_cast<int>(it - values_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string_view stat_name(StatKind k) {
  switch (k) {
    case StatKind::leftpeak: return "leftpeak";
    case StatKind::interiorpeak: return "interiorpeak";
    case StatKind::exteriorpeak: return "exteriorpeak";
    case StatKind::updownrun: return "updownrun";
    case StatKind::altrun: return "altrun";
  }
  return "?";
}

StatKind stat_from_name(std::string_view name) {
  for (StatKind k : kAllStats)
    if (stat_name(k) == name) return k;
  if (name == "updown") return StatKind::updownrun;
  if (name == "alt") return StatKind::altrun;
  throw std::invalid_argument("unknown statistic \"" + std::string(name) + "\"");
}

// Each statistic pads with zeros on the sides its definition names.

int left_peaks(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 1; i <= n - 1; ++i) {
    const int prev = i == 1 ? 0 : s[static_cast<std::size_t>(i - 2)];
    const int cur = s[static_cast<std::size_t>(i - 1)];
    if (prev < cur && cur > s[static_cast<std::size_t>(i)]) ++count;
  }
  return count;
}

int interior_peaks(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 2; i <= n - 1; ++i) {
    const auto j = static_cast<std::size_t>(i - 1);
    if (s[j - 1] < s[j] && s[j] > s[j + 1]) ++count;
  }
  return count;
}

int exterior_peaks(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int prev = i == 1 ? 0 : s[static_cast<std::size_t>(i - 2)];
    const int next = i == n ? 0 : s[static_cast<std::size_t>(i)];
    const int cur = s[static_cast<std::size_t>(i - 1)];
    if (prev < cur && cur > next) ++count;
  }
  return count;
}

namespace {

// Maximal monotone segments of a sequence; adjacent runs share an endpoint.
int monotone_runs(std::span<const int> s) {
  if (s.size() < 2) return 0;
  int runs = 1;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const bool up_before = s[i] > s[i - 1];
    const bool up_after = s[i + 1] > s[i];
    if (up_before != up_after) ++runs;
  }
  return runs;
}

}  // namespace

int updown_runs(std::span<const int> s) {
  std::vector<int> padded;
  padded.reserve(s.size() + 1);
  padded.push_back(0);
  padded.insert(padded.end(), s.begin(), s.end());
  return monotone_runs(padded);
}

int alternating_runs(std::span<const int> s) { return monotone_runs(s); }

int stat(StatKind kind, const Permutation& sigma) {
  const std::span<const int> s(sigma.values());
  switch (kind) {
    case StatKind::leftpeak: return left_peaks(s);
    case StatKind::interiorpeak: return interior_peaks(s);
    case StatKind::exteriorpeak: return exterior_peaks(s);
    case StatKind::updownrun: return updown_runs(s);
    case StatKind::altrun: return alternating_runs(s);
  }
  throw std::invalid_argument("unknown statistic");
}

bool is_down_up(const Permutation& sigma) {
  const auto& v = sigma.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const bool should_fall = i % 2 == 0;
    if (should_fall != (v[i] > v[i + 1])) return false;
  }
  return true;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

int brute_force_bound() {
  if (const char* env = std::getenv("GRAMCALC_BRUTE_MAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 13) return static_cast<int>(v);
  }
  return 10;
}

BigInt StatTriangle::count(int k) const {
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(k)];
}

BigInt StatTriangle::row_sum() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

std::pair<int, int> valid_range(StatKind kind, int n) {
  if (n <= 0) return {0, 0};
  switch (kind) {
    case StatKind::leftpeak: return {0, n / 2};
    case StatKind::interiorpeak: return {0, (n - 1) / 2};
    case StatKind::exteriorpeak: return {1, (n + 1) / 2};
    case StatKind::updownrun: return {1, n};
    case StatKind::altrun: return n == 1 ? std::pair{0, 0} : std::pair{1, n - 1};
  }
  throw std::invalid_argument("unknown statistic");
}

namespace {

void check_bound(int n, int bound) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  if (n > bound)
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the brute-force bound " + std::to_string(bound) +
                            "; use the recurrence method (available for updownrun)");
}

}  // namespace

std::array<StatTriangle, 5> all_triangles(int n, int bound) {
  check_bound(n, bound);
  std::array<std::vector<std::uint64_t>, 5> raw;
  for (auto& r : raw) r.assign(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    const std::span<const int> s(v);
    ++raw[0][static_cast<std::size_t>(left_peaks(s))];
    ++raw[1][static_cast<std::size_t>(interior_peaks(s))];
    ++raw[2][static_cast<std::size_t>(exterior_peaks(s))];
    ++raw[3][static_cast<std::size_t>(updown_runs(s))];
    ++raw[4][static_cast<std::size_t>(alternating_runs(s))];
  } while (std::next_permutation(v.begin(), v.end()));

  std::array<StatTriangle, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    out[i].kind = kAllStats[i];
    out[i].n = n;
    for (auto c : raw[i]) out[i].counts.emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

StatTriangle triangle(StatKind kind, int n, int bound) {
  check_bound(n, bound);
  std::vector<std::uint64_t> raw(static_cast<std::size_t>(n) + 2, 0);
  for_each_permutation(n, [&](const Permutation& p) { ++raw[static_cast<std::size_t>(stat(kind, p))]; });
  StatTriangle t{kind, n, {}};
  for (auto c : raw) t.counts.emplace_back(static_cast<unsigned long>(c));
  return t;
}

StatTriangle triangle(StatKind kind, int n, TriangleMethod method, int bound) {
  if (method == TriangleMethod::brute) return triangle(kind, n, bound);
  if (kind != StatKind::updownrun) throw std::invalid_argument("the recurrence method exists only for updownrun");
  StatTriangle t{kind, n, lambda_recurrence_row(n)};
  t.counts.emplace_back(0);
  return t;
}

std::vector<BigInt> lambda_recurrence_row(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  // Lambda(n,k) = k L(n-1,k) + L(n-1,k-1) + (n-k+1) L(n-1,k-2), from Lambda(0,0) = 1.
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
    auto prev = [&](int k) -> BigInt {
      return (k < 0 || k >= static_cast<int>(row.size())) ? BigInt(0) : row[static_cast<std::size_t>(k)];
    };
    for (int k = 1; k <= m; ++k) {
      next[static_cast<std::size_t>(k)] = k * prev(k) + prev(k - 1) + (m - k + 1) * prev(k - 2);
    }
    row = std::move(next);
  }
  return row;
}

namespace {

Monomial xy(int ex, int ey) { return Monomial{{Var::x, ex}, {Var::y, ey}}; }

}  // namespace

LaurentPoly bivariate(const StatTriangle& row) {
  const int n = row.n;
  LaurentPoly p;
  if (row.kind == StatKind::interiorpeak && n == 0) return LaurentPoly(1);
  if (row.kind == StatKind::altrun && n == 0) throw std::invalid_argument("R_m needs the row of S_{m+1}");
  for (int k = 0; k < static_cast<int>(row.counts.size()); ++k) {
    const Rational c(row.counts[static_cast<std::size_t>(k)]);
    if (c == 0) continue;
    switch (row.kind) {
      case StatKind::leftpeak: p.add_term(xy(2 * k + 1, n - 2 * k), c); break;
      case StatKind::interiorpeak: p.add_term(xy(2 * k + 2, n - 2 * k - 1), c); break;
      case StatKind::exteriorpeak: p.add_term(xy(2 * k, n - 2 * k + 1), c); break;
      case StatKind::updownrun: p.add_term(xy(k, n - k), c); break;
      case StatKind::altrun: p.add_term(xy(k, n - 1 - k), c); break;
    }
  }
  return p;
}

LaurentPoly bivariate(StatKind kind, int n, int bound) {
  if (kind == StatKind::altrun) return bivariate(triangle(kind, n + 1, bound));
  if (kind == StatKind::updownrun && n > bound) return bivariate(triangle(kind, n, TriangleMethod::recurrence, bound));
  return bivariate(triangle(kind, n, bound));
}

LaurentPoly univariate(const StatTriangle& row) {
  LaurentPoly p;
  for (int k = 0; k < static_cast<int>(row.counts.size()); ++k)
    p.add_term(Monomial::of(Var::x, k), Rational(row.counts[static_cast<std::size_t>(k)]));
  return p;
}

}  // namespace gramcalc
