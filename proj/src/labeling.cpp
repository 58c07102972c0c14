#include "gramcalc/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace gramcalc {

char label_symbol(Label l) {
  switch (l) {
    case Label::a: return 'a';
    case Label::x: return 'x';
    case Label::y: return 'y';
  }
  return '?';
}

Var label_var(Label l) {
  switch (l) {
    case Label::a: return Var::a;
    case Label::x: return Var::x;
    case Label::y: return Var::y;
  }
  throw std::invalid_argument("bad label");
}

LabelSeq a_labeling(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 1) throw std::invalid_argument("the A-labeling needs n >= 1");
  std::vector<int> s{0};
  s.insert(s.end(), sigma.values().begin(), sigma.values().end());

  LabelSeq ls{std::vector<Label>(static_cast<std::size_t>(n) + 1, Label::y)};
  auto set = [&](int pos, Label l) { ls.labels[static_cast<std::size_t>(pos - 1)] = l; };

  // Walk the maximal runs of 0 sigma_1 ... sigma_n; run i..j covers s[i..j].
  int i = 0;
  while (i < n) {
    const bool up = s[static_cast<std::size_t>(i + 1)] > s[static_cast<std::size_t>(i)];
    int j = i + 1;
    while (j < n && (s[static_cast<std::size_t>(j + 1)] > s[static_cast<std::size_t>(j)]) == up) ++j;
    if (up) {
      if (j < n) {
        set(j, Label::x);
      } else {
        set(n, Label::a);
        set(n + 1, Label::x);
      }
    } else {
      set(i + 1, Label::x);
      if (j == n) set(n + 1, Label::a);
    }
    i = j;
  }
  return ls;
}

LabelSeq l_labeling(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 1) throw std::invalid_argument("the L-labeling needs n >= 1");
  LabelSeq ls{std::vector<Label>(static_cast<std::size_t>(n) + 1, Label::y)};
  for (int i = 1; i <= n - 1; ++i) {
    const int prev = i == 1 ? 0 : sigma.at(i - 1);
    if (prev < sigma.at(i) && sigma.at(i) > sigma.at(i + 1)) {
      ls.labels[static_cast<std::size_t>(i - 1)] = Label::x;
      ls.labels[static_cast<std::size_t>(i)] = Label::x;
    }
  }
  ls.labels.back() = Label::x;
  return ls;
}

LabelSeq w_labeling(const Permutation& sigma) {
  const int n = sigma.size();
  LabelSeq ls{std::vector<Label>(static_cast<std::size_t>(n) + 1, Label::y)};
  for (int j = 1; j <= n; ++j) {
    const int prev = j == 1 ? 0 : sigma.at(j - 1);
    const int next = j == n ? 0 : sigma.at(j + 1);
    if (prev < sigma.at(j) && sigma.at(j) > next) {
      ls.labels[static_cast<std::size_t>(j - 1)] = Label::x;
      ls.labels[static_cast<std::size_t>(j)] = Label::x;
    }
  }
  return ls;
}

LaurentPoly label_weight(const LabelSeq& ls) {
  Monomial m;
  for (Label l : ls.labels) m = m * Monomial::of(label_var(l));
  return LaurentPoly(m);
}

std::string render_labeled(const Permutation& sigma, const LabelSeq& ls, int marked) {
  if (ls.size() != sigma.size() + 1) throw std::invalid_argument("label sequence length must be n+1");
  std::string out = "0";
  for (int k = 1; k <= ls.size(); ++k) {
    out += ' ';
    if (k == marked) out += '[';
    out += label_symbol(ls.at(k));
    if (k == marked) out += ']';
    if (k <= sigma.size()) out += ' ' + std::to_string(sigma.at(k));
  }
  return out;
}

std::string to_string(const LabelSeq& ls) {
  std::string out;
  for (Label l : ls.labels) {
    if (!out.empty()) out += ' ';
    out += label_symbol(l);
  }
  return out;
}

LaurentPoly run_rule_image(Label l) {
  const LaurentPoly x = LaurentPoly::var(Var::x);
  switch (l) {
    case Label::a: return LaurentPoly::var(Var::a) * x;
    case Label::x: return x * LaurentPoly::var(Var::y);
    case Label::y: return x * x;
  }
  throw std::invalid_argument("bad label");
}

ConsistencyReport insert_consistency(const Permutation& sigma, int k) {
  const int n = sigma.size();
  if (k < 1 || k > n + 1) throw std::out_of_range("insertion position outside 1..n+1");
  const LabelSeq before = a_labeling(sigma);
  ConsistencyReport r;
  r.old_label = before.at(k);
  r.applied_rule = std::string(1, label_symbol(r.old_label)) + "->" + to_string(run_rule_image(r.old_label));
  const LaurentPoly expected =
      label_weight(before) * LaurentPoly::var(label_var(r.old_label), -1) * run_rule_image(r.old_label);
  r.ok = label_weight(a_labeling(sigma.inserted(k))) == expected;
  return r;
}

Decomposition decompose(DecompositionKind kind, const Permutation& sigma) {
  const auto& v = sigma.values();
  Decomposition d{kind, {}};
  std::size_t start = 0;
  while (start < v.size()) {
    const auto it = kind == DecompositionKind::LW ? std::min_element(v.begin() + static_cast<long>(start), v.end())
                                                  : std::max_element(v.begin() + static_cast<long>(start), v.end());
    const auto end = static_cast<std::size_t>(it - v.begin()) + 1;
    d.blocks.emplace_back(v.begin() + static_cast<long>(start), v.begin() + static_cast<long>(end));
    start = end;
  }
  return d;
}

std::string to_string(const Decomposition& d) {
  std::string out;
  for (const auto& block : d.blocks) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

int lw_block_peak_sum(const Permutation& sigma) {
  int total = 0;
  for (const auto& block : decompose(DecompositionKind::LW, sigma).blocks)
    total += exterior_peaks(std::span<const int>(block).first(block.size() - 1));
  return total;
}

LaurentPoly al_block_weight(const Permutation& sigma) {
  int exponent = 0;
  for (const auto& block : decompose(DecompositionKind::AL, sigma).blocks)
    exponent += 2 * left_peaks(std::span<const int>(block).first(block.size() - 1)) + 1;
  return LaurentPoly::var(Var::x, exponent);
}

}  // namespace gramcalc
