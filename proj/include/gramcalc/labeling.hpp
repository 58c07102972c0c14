#pragma once

// Grammatical labelings of permutations and the LW/AL decompositions.

#include "gramcalc/permstat.hpp"

#include <string>
#include <vector>

namespace gramcalc {

enum class Label { a, x, y };

char label_symbol(Label l);
Var label_var(Label l);

/// labels[k-1] belongs to position k, the slot before sigma_k; position n+1
/// is the slot after sigma_n.
struct LabelSeq {
  std::vector<Label> labels;

  int size() const { return static_cast<int>(labels.size()); }
  /// One-based position access.
  Label at(int k) const { return labels.at(static_cast<std::size_t>(k - 1)); }
  bool operator==(const LabelSeq&) const = default;
};

LabelSeq a_labeling(const Permutation& sigma);
LabelSeq l_labeling(const Permutation& sigma);
/// x on both positions j, j+1 of every exterior peak j (position n+1 standing
/// in for the slot after sigma_n), y elsewhere.
LabelSeq w_labeling(const Permutation& sigma);

LaurentPoly label_weight(const LabelSeq& ls);

/// "0 y 3 x 7 ... 2 a". A positive `marked` position is shown as [label].
std::string render_labeled(const Permutation& sigma, const LabelSeq& ls, int marked = 0);
/// Labels only, space separated.
std::string to_string(const LabelSeq& ls);

/// Image of a label under the up-down run grammar: a->ax, x->xy, y->x^2.
LaurentPoly run_rule_image(Label l);

struct ConsistencyReport {
  Label old_label{};
  /// e.g. "y->x^2".
  std::string applied_rule;
  bool ok = false;
};

/// Compares the A-labeling weight after inserting n+1 at position k with the
/// weight obtained by applying the rule to the old label at k.
ConsistencyReport insert_consistency(const Permutation& sigma, int k);

enum class DecompositionKind { LW, AL };

struct Decomposition {
  DecompositionKind kind{};
  std::vector<std::vector<int>> blocks;
};

/// LW blocks each end with the minimum of the remaining suffix, AL blocks with
/// its maximum.
Decomposition decompose(DecompositionKind kind, const Permutation& sigma);
/// "2 6 1 | 3 | 8 4 | 7 9 5".
std::string to_string(const Decomposition& d);

/// sum over LW blocks of the exterior peaks of the block minus its last entry.
int lw_block_peak_sum(const Permutation& sigma);
/// prod over AL blocks of x^(2 leftpeak(block minus its last entry) + 1).
LaurentPoly al_block_weight(const Permutation& sigma);

}  // namespace gramcalc
