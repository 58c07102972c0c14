#include "gramcalc/bijection.hpp"

#include <stdexcept>

namespace gramcalc {

std::string_view bijection_name(BijectionKind k) {
  switch (k) {
    case BijectionKind::updown: return "updown";
    case BijectionKind::leftpeak: return "leftpeak";
    case BijectionKind::exterior: return "exterior";
    case BijectionKind::unified: return "unified";
  }
  return "?";
}

BijectionKind bijection_from_name(std::string_view name) {
  for (auto k : {BijectionKind::updown, BijectionKind::leftpeak, BijectionKind::exterior, BijectionKind::unified})
    if (bijection_name(k) == name) return k;
  throw std::invalid_argument("unknown bijection \"" + std::string(name) + "\"");
}

LabelSeq driving_labeling(BijectionKind kind, const Permutation& sigma) {
  switch (kind) {
    case BijectionKind::updown: return a_labeling(sigma);
    case BijectionKind::leftpeak: return l_labeling(sigma);
    case BijectionKind::exterior:
    case BijectionKind::unified: return w_labeling(sigma);
  }
  throw std::invalid_argument("bad bijection kind");
}

LaurentPoly rule_image(BijectionKind kind, Label l) {
  if (kind == BijectionKind::updown) return run_rule_image(l);
  const LaurentPoly x = LaurentPoly::var(Var::x);
  switch (l) {
    case Label::x: return x * LaurentPoly::var(Var::y);
    case Label::y: return x * x;
    case Label::a: break;
  }
  throw std::logic_error("label a has no rule in the peak grammar");
}

LaurentPoly transported_tree_weight(BijectionKind kind, const IncreasingTree& t) {
  switch (kind) {
    case BijectionKind::updown: return tree_weight(t, TreeScheme::parity);
    case BijectionKind::leftpeak: return tree_weight(t, TreeScheme::L);
    case BijectionKind::exterior:
    case BijectionKind::unified: return tree_weight(t, TreeScheme::W);
  }
  throw std::invalid_argument("bad bijection kind");
}

namespace {

// s[0] = 0, s[1..i] = pi, s[i+1] = 0.
std::vector<int> padded(const Permutation& pi) {
  std::vector<int> s{0};
  s.insert(s.end(), pi.values().begin(), pi.values().end());
  s.push_back(0);
  return s;
}

int at(const std::vector<int>& s, int k) { return s[static_cast<std::size_t>(k)]; }

// An x on the rise reflects to the element after it, an x on the fall to the
// element before it.
int reflect(const std::vector<int>& s, int k) { return at(s, k - 1) < at(s, k) ? at(s, k + 1) : at(s, k - 1); }

int attach_updown(const Permutation& pi, int k) {
  const int i = pi.size();
  const auto s = padded(pi);
  switch (a_labeling(pi).at(k)) {
    case Label::a: return 0;
    case Label::x: return k == i + 1 ? at(s, i) : reflect(s, k);
    case Label::y: return at(s, k);
  }
  throw std::logic_error("bad label");
}

int attach_leftpeak(const Permutation& pi, int k) {
  const int i = pi.size();
  const auto s = padded(pi);
  const Label l = l_labeling(pi).at(k);
  if (k <= i - 1 || (k == i && l == Label::x)) return l == Label::x ? reflect(s, k) : at(s, k);
  const bool ascent = at(s, i - 1) < at(s, i);
  if (k == i) return ascent ? 0 : at(s, i);
  return ascent ? at(s, i) : 0;
}

int attach_exterior(const Permutation& pi, int k) {
  const int i = pi.size();
  const auto s = padded(pi);
  if (w_labeling(pi).at(k) == Label::y) return at(s, k);  // s[i+1] = 0 is the root
  const bool left_of_peak = k <= i && at(s, k - 1) < at(s, k) && at(s, k) > at(s, k + 1);
  return left_of_peak ? at(s, k + 1) : at(s, k - 1);
}

int attach_unified(const Permutation& pi, int k) {
  const int i = pi.size();
  const int m = i + 1;  // positions mod i+1
  const int p = k % m;  // slot after sigma_i is position 0
  auto vertex = [&](int q) { return q == 0 ? 0 : pi.at(q); };
  auto peak = [&](int j) {
    if (j < 1 || j > i) return false;
    const int prev = j == 1 ? 0 : pi.at(j - 1);
    const int next = j == i ? 0 : pi.at(j + 1);
    return prev < pi.at(j) && pi.at(j) > next;
  };
  if (p >= 1 && peak(p)) return vertex((p + 1) % m);
  const int before = p == 0 ? i : p - 1;
  if (peak(before)) return vertex(before);
  return vertex(p);
}

[[noreturn]] void incoherent(BijectionKind kind, const Permutation& pi, const IncreasingTree& t, const std::string& what) {
  throw std::logic_error(std::string(bijection_name(kind)) + ": labeling of " + pi.to_string() +
                         " is not coherent with tree " + t.to_string() + " (" + what + ")");
}

void check_coherence(BijectionKind kind, const Permutation& pi, const IncreasingTree& t) {
  const LabelSeq labels = driving_labeling(kind, pi);
  if (label_weight(labels) != transported_tree_weight(kind, t)) incoherent(kind, pi, t, "weights differ");
  if (kind != BijectionKind::updown) return;
  // Every slot carries the label of one vertex; which vertex depends on whether
  // pi ends with an ascent or a descent.
  const int i = pi.size();
  const bool descent_end = i >= 2 && pi.at(i - 1) > pi.at(i);
  const auto tree = tree_labels(t, TreeScheme::parity);
  for (int k = 1; k <= i + 1; ++k) {
    int v;
    if (descent_end) {
      v = k <= i ? pi.at(k) : 0;
    } else {
      v = k <= i - 1 ? pi.at(k) : (k == i ? 0 : pi.at(i));
    }
    if (tree[static_cast<std::size_t>(v)] != label_symbol(labels.at(k)))
      incoherent(kind, pi, t, "position " + std::to_string(k) + " vs vertex " + std::to_string(v));
  }
}

int insertion_position(const Permutation& sigma, int v) {
  int k = 1;
  for (int e : sigma.values()) {
    if (e == v) return k;
    if (e < v) ++k;
  }
  throw std::logic_error("element missing");
}

}  // namespace

int attach_vertex(BijectionKind kind, const Permutation& pi, int k) {
  if (pi.size() < 1 || k < 1 || k > pi.size() + 1) throw std::out_of_range("insertion position outside 1..i+1");
  switch (kind) {
    case BijectionKind::updown: return attach_updown(pi, k);
    case BijectionKind::leftpeak: return attach_leftpeak(pi, k);
    case BijectionKind::exterior: return attach_exterior(pi, k);
    case BijectionKind::unified: return attach_unified(pi, k);
  }
  throw std::invalid_argument("bad bijection kind");
}

InsertionTrace phi_trace(BijectionKind kind, const Permutation& sigma) {
  const int n = sigma.size();
  InsertionTrace trace{kind, sigma, IncreasingTree(), {}};
  if (n == 0) return trace;
  Permutation pi({1});
  IncreasingTree t({0});
  check_coherence(kind, pi, t);
  for (int i = 1; i < n; ++i) {
    const int k = insertion_position(sigma.restricted(i + 1), i + 1);
    const int parent = attach_vertex(kind, pi, k);
    trace.steps.push_back({i + 1, k, driving_labeling(kind, pi).at(k), parent});
    pi = pi.inserted(k);
    t = t.attached(parent);
    check_coherence(kind, pi, t);
  }
  trace.tree = t;
  return trace;
}

IncreasingTree phi(BijectionKind kind, const Permutation& sigma) { return phi_trace(kind, sigma).tree; }

Permutation phi_inverse(BijectionKind kind, const IncreasingTree& t) {
  const int n = t.size();
  if (n == 0) return Permutation();
  Permutation pi({1});
  for (int i = 1; i < n; ++i) {
    int found = 0;
    for (int k = 1; k <= i + 1; ++k) {
      if (attach_vertex(kind, pi, k) != t.parent(i + 1)) continue;
      if (found) throw std::logic_error("two insertion positions give the same tree for " + pi.to_string());
      found = k;
    }
    if (!found) throw std::logic_error("no insertion position reproduces tree " + t.to_string());
    pi = pi.inserted(found);
  }
  return pi;
}

IncreasingTree unified_reflection(const Permutation& sigma) { return phi(BijectionKind::unified, sigma); }

std::string render_trace(const InsertionTrace& trace) {
  const int n = trace.sigma.size();
  std::string out = "i | sigma^(i) with labeling | weight | substitution\n";
  for (int i = std::min(2, n); i <= n; ++i) {
    const Permutation pi = trace.sigma.restricted(i);
    const LabelSeq labels = driving_labeling(trace.kind, pi);
    int marked = 0;
    std::string rule;
    if (i < n) {
      const InsertionStep& step = trace.steps[static_cast<std::size_t>(i - 1)];
      marked = step.position;
      rule = std::string(1, label_symbol(step.label)) + "->" + to_string(rule_image(trace.kind, step.label));
    }
    out += std::to_string(i) + " | " + render_labeled(pi, labels, marked) + " | " + to_string(label_weight(labels)) +
           " | " + rule + "\n";
  }
  return out;
}

}  // namespace gramcalc
