#pragma once

// Insertion bijections between permutations of [n] and increasing trees on
// {0..n}. Each step inserts i+1 into sigma^(i) and attaches i+1 to the vertex
// the current labeling dictates.

#include "gramcalc/labeling.hpp"
#include "gramcalc/trees.hpp"

#include <string>
#include <vector>

namespace gramcalc {

enum class BijectionKind { updown, leftpeak, exterior, unified };

std::string_view bijection_name(BijectionKind k);
BijectionKind bijection_from_name(std::string_view name);

/// Labeling that drives each kind: A for updown, L for leftpeak, W otherwise.
LabelSeq driving_labeling(BijectionKind kind, const Permutation& sigma);
/// Rule image of a label under the grammar that goes with the kind.
LaurentPoly rule_image(BijectionKind kind, Label l);
/// Weight the tree must carry for the kind (parity, L or W scheme).
LaurentPoly transported_tree_weight(BijectionKind kind, const IncreasingTree& t);

/// Vertex of T^(i) that i+1 is attached to when it is inserted into
/// pi = sigma^(i) at position k (1 <= k <= i+1).
int attach_vertex(BijectionKind kind, const Permutation& pi, int k);

struct InsertionStep {
  int element = 0;   // i+1
  int position = 0;  // k, slot in sigma^(i)
  Label label{};     // label of position k before the insertion
  int parent = 0;
};

struct InsertionTrace {
  BijectionKind kind{};
  Permutation sigma;
  IncreasingTree tree;
  std::vector<InsertionStep> steps;  // elements 2..n
};

/// Runs the construction, checking after every step that the tree weight
/// equals the labeling weight (and for updown, that every position's label
/// matches its vertex's label). Throws std::logic_error on a violation.
InsertionTrace phi_trace(BijectionKind kind, const Permutation& sigma);
IncreasingTree phi(BijectionKind kind, const Permutation& sigma);

/// Replays the forward steps, choosing at each i the unique position whose
/// attachment matches T. Throws std::logic_error if no or several positions match.
Permutation phi_inverse(BijectionKind kind, const IncreasingTree& t);

/// Positions 0..n with 0 the last slot: a position inside an exterior peak
/// pair attaches to its partner's vertex, any other position to its own.
IncreasingTree unified_reflection(const Permutation& sigma);

/// One row per i in 2..n: i | sigma^(i) with the next insertion slot in
/// brackets | weight | substitution.
std::string render_trace(const InsertionTrace& trace);

}  // namespace gramcalc
