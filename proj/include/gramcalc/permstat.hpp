#pragma once

#include "gramcalc/poly.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gramcalc {

/// A permutation of [n] stored as sigma_1..sigma_n. The padding zeros used by
/// the statistics are never stored.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// "3,7,5,8,6,1,4,9,2"; an empty string is the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  /// One-based access, sigma_i for 1 <= i <= n.
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }

  /// Inserts value n+1 at position k (1 <= k <= n+1), i.e. before sigma_k.
  Permutation inserted(int k) const;
  /// Removes every element greater than m.
  Permutation restricted(int m) const;
  /// One-based index of the largest element.
  int position_of_max() const;

  std::string to_string() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

enum class StatKind { leftpeak, interiorpeak, exteriorpeak, updownrun, altrun };

inline constexpr std::array<StatKind, 5> kAllStats{StatKind::leftpeak, StatKind::interiorpeak,
                                                   StatKind::exteriorpeak, StatKind::updownrun, StatKind::altrun};

std::string_view stat_name(StatKind k);
/// Accepts the canonical names plus "updown" and "alt".
StatKind stat_from_name(std::string_view name);

/// Statistics of any sequence of distinct positive integers.
int left_peaks(std::span<const int> s);
int interior_peaks(std::span<const int> s);
int exterior_peaks(std::span<const int> s);
int updown_runs(std::span<const int> s);
int alternating_runs(std::span<const int> s);

int stat(StatKind kind, const Permutation& sigma);
bool is_down_up(const Permutation& sigma);

/// Calls fn for each permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Brute-force limit: GRAMCALC_BRUTE_MAX if set, else 10.
int brute_force_bound();

struct StatTriangle {
  StatKind kind{};
  int n = 0;
  /// counts[k] for k = 0..size-1; entries outside the valid range are zero.
  std::vector<BigInt> counts;

  BigInt count(int k) const;
  BigInt row_sum() const;
  bool operator==(const StatTriangle&) const = default;
};

/// Smallest and largest k that can occur for permutations of [n].
std::pair<int, int> valid_range(StatKind kind, int n);

enum class TriangleMethod { brute, recurrence };

/// Exhaustive count over S_n. Throws std::out_of_range above `bound`.
StatTriangle triangle(StatKind kind, int n, int bound = brute_force_bound());
/// All five statistics in a single pass over S_n.
std::array<StatTriangle, 5> all_triangles(int n, int bound = brute_force_bound());
/// Recurrence is only available for updownrun.
StatTriangle triangle(StatKind kind, int n, TriangleMethod method, int bound = brute_force_bound());

/// Lambda(n, k) for k = 0..n from the three-term recurrence alone.
std::vector<BigInt> lambda_recurrence_row(int n);

/// The bivariate encoding of a row: L_n, M_n, W_n, Lambda_n or R_n (the
/// latter from the row of S_{n+1}; pass a triangle with n = m+1 to get R_m).
LaurentPoly bivariate(const StatTriangle& row);
/// Same, enumerating the needed row (S_{n+1} for altrun). updownrun rows
/// above the brute-force bound come from the recurrence.
LaurentPoly bivariate(StatKind kind, int n, int bound = brute_force_bound());
/// sum_k count(k) x^k.
LaurentPoly univariate(const StatTriangle& row);

}  // namespace gramcalc
