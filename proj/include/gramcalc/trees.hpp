#pragma once

// Increasing (recursive, unordered) trees on {0, 1, ..., n} rooted at 0.

#include "gramcalc/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gramcalc {

class IncreasingTree {
 public:
  /// The single vertex 0.
  IncreasingTree() = default;
  /// parent[v-1] is the parent of v; throws std::invalid_argument unless
  /// 0 <= parent(v) < v for every v.
  explicit IncreasingTree(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& parents() const { return parent_; }
  /// Number of children.
  int degree(int v) const;
  std::vector<int> children(int v) const;

  /// Adds vertex n+1 below p.
  IncreasingTree attached(int p) const;
  /// Keeps vertices 0..m.
  IncreasingTree restricted(int m) const;

  /// "0,1,0,2,3,3,6,2,2".
  std::string to_string() const;
  static IncreasingTree parse(std::string_view text);

  bool operator==(const IncreasingTree&) const = default;
  auto operator<=>(const IncreasingTree&) const = default;

 private:
  std::vector<int> parent_;
};

/// Tree enumeration limit: 8 unless GRAMCALC_BRUTE_MAX is smaller.
int tree_bound();

/// Calls fn for all n! trees. Throws std::out_of_range above `bound`.
void enumerate_trees(int n, const std::function<void(const IncreasingTree&)>& fn, int bound = tree_bound());
std::vector<IncreasingTree> all_trees(int n, int bound = tree_bound());

enum class TreeScheme { parity, L, W };

/// Per-vertex labels, index v for vertex v.
/// parity: root a, other vertices x for even degree and y for odd.
/// L: every vertex including the root by the parity rule.
/// W: nonroot vertices by the parity rule, root x for odd degree, y for even.
std::vector<char> tree_labels(const IncreasingTree& t, TreeScheme scheme);
LaurentPoly tree_weight(const IncreasingTree& t, TreeScheme scheme);

/// Nonroot vertices of even degree.
int even_nonroot_count(const IncreasingTree& t);
/// All vertices of even degree, root included.
int even_vertex_count(const IncreasingTree& t);
bool is_even_tree(const IncreasingTree& t);

/// "0(a) 1(y) 2(y) ..." in vertex order.
std::string render_labels(const IncreasingTree& t, TreeScheme scheme);

}  // namespace gramcalc
