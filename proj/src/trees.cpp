#include "gramcalc/trees.hpp"

#include "gramcalc/permstat.hpp"

#include <algorithm>
#include <stdexcept>

namespace gramcalc {

IncreasingTree::IncreasingTree(std::vector<int> parent) : parent_(std::move(parent)) {
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    const int v = static_cast<int>(i) + 1;
    if (parent_[i] < 0 || parent_[i] >= v)
      throw std::invalid_argument("parent of " + std::to_string(v) + " must lie in 0.." + std::to_string(v - 1));
  }
}

int IncreasingTree::degree(int v) const {
  if (v < 0 || v > size()) throw std::out_of_range("no vertex " + std::to_string(v));
  return static_cast<int>(std::count(parent_.begin(), parent_.end(), v));
}

std::vector<int> IncreasingTree::children(int v) const {
  std::vector<int> out;
  for (int w = v + 1; w <= size(); ++w)
    if (parent(w) == v) out.push_back(w);
  return out;
}

IncreasingTree IncreasingTree::attached(int p) const {
  if (p < 0 || p > size()) throw std::out_of_range("no vertex " + std::to_string(p));
  IncreasingTree t = *this;
  t.parent_.push_back(p);
  return t;
}

IncreasingTree IncreasingTree::restricted(int m) const {
  IncreasingTree t;
  t.parent_.assign(parent_.begin(), parent_.begin() + std::min<long>(m, size()));
  return t;
}

std::string IncreasingTree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parent_[i]);
  }
  return out;
}

IncreasingTree IncreasingTree::parse(std::string_view text) {
  // Same literal shape as a permutation, minus the rearrangement check.
  std::vector<int> parent;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("malformed parent array \"" + std::string(text) + "\"");
    parent.push_back(std::stoi(token));
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    any = true;
    if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      token += c;
    } else {
      throw std::invalid_argument("malformed parent array \"" + std::string(text) + "\"");
    }
  }
  if (any) flush();
  return IncreasingTree(std::move(parent));
}

int tree_bound() { return std::min(8, brute_force_bound()); }

void enumerate_trees(int n, const std::function<void(const IncreasingTree&)>& fn, int bound) {
  if (n < 0) throw std::invalid_argument("negative tree size");
  if (n > bound)
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the tree enumeration bound " + std::to_string(bound));
  // Odometer over parent(v) in 0..v-1.
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(IncreasingTree(parent));
    int v = n;
    while (v >= 1 && parent[static_cast<std::size_t>(v - 1)] == v - 1) {
      parent[static_cast<std::size_t>(v - 1)] = 0;
      --v;
    }
    if (v < 1) return;
    ++parent[static_cast<std::size_t>(v - 1)];
  }
}

std::vector<IncreasingTree> all_trees(int n, int bound) {
  std::vector<IncreasingTree> out;
  enumerate_trees(n, [&](const IncreasingTree& t) { out.push_back(t); }, bound);
  return out;
}

std::vector<char> tree_labels(const IncreasingTree& t, TreeScheme scheme) {
  const int n = t.size();
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (int p : t.parents()) ++deg[static_cast<std::size_t>(p)];
  std::vector<char> labels(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) labels[static_cast<std::size_t>(v)] = deg[static_cast<std::size_t>(v)] % 2 == 0 ? 'x' : 'y';
  const bool root_even = deg[0] % 2 == 0;
  switch (scheme) {
    case TreeScheme::parity: labels[0] = 'a'; break;
    case TreeScheme::L: labels[0] = root_even ? 'x' : 'y'; break;
    case TreeScheme::W: labels[0] = root_even ? 'y' : 'x'; break;
  }
  return labels;
}

LaurentPoly tree_weight(const IncreasingTree& t, TreeScheme scheme) {
  Monomial m;
  for (char c : tree_labels(t, scheme)) m = m * Monomial::of(var_from_symbol(c));
  return LaurentPoly(m);
}

int even_nonroot_count(const IncreasingTree& t) {
  int count = 0;
  for (int v = 1; v <= t.size(); ++v) count += t.degree(v) % 2 == 0 ? 1 : 0;
  return count;
}

int even_vertex_count(const IncreasingTree& t) { return even_nonroot_count(t) + (t.degree(0) % 2 == 0 ? 1 : 0); }

bool is_even_tree(const IncreasingTree& t) { return even_nonroot_count(t) == t.size(); }

std::string render_labels(const IncreasingTree& t, TreeScheme scheme) {
  const auto labels = tree_labels(t, scheme);
  std::string out;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(v) + '(' + labels[v] + ')';
  }
  return out;
}

}  // namespace gramcalc
