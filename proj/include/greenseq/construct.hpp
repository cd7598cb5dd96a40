#pragma once

#include <vector>

#include "greenseq/classify.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// first on 1..n1, second shifted to n1+1..n1+n2, plus tails[i] -> heads[i]
// (heads given in the second quiver's own labels).
struct DirectSumSpec {
  Quiver first;
  Quiver second;
  std::vector<int> tails;
  std::vector<int> heads;
};

Quiver direct_sum(const DirectSumSpec& spec);

// first_mgs then second_mgs (shifted); HypothesisViolated if some tail/head
// pair is joined by more than one arrow.
GreenSequence concat_mgs(const DirectSumSpec& spec, const GreenSequence& first_mgs, const GreenSequence& second_mgs);

// Grows core_mgs (an MGS of the full subquiver on `core`, in q's labels) to
// an MGS of q by adding one pendant vertex or pendant 3-cycle at a time,
// smallest candidate first. NotABranchQuiver when a step does not fit.
GreenSequence attach_branch_mgs(const Quiver& q, const VertexSet& core, const GreenSequence& core_mgs);

// One run of same-direction arrows of the non-oriented cycle. `path` follows
// the arrows; `apexes` holds the third vertices of its 3-cycles.
struct AffineComponent {
  std::vector<int> path;
  VertexSet apexes;
  GreenSequence initial;
  GreenSequence final;
};

// clockwise[i] and counterclockwise[i] share their source; pairs are ordered
// by that source.
struct AffineComponents {
  std::vector<AffineComponent> clockwise;
  std::vector<AffineComponent> counterclockwise;
};

// For an affine quiver made of its cycle and single-vertex attachments, not a
// direct sum of two type A quivers. PreconditionViolated otherwise.
AffineComponents affine_components(const Quiver& q);

// All clockwise initials, all counterclockwise initials, counterclockwise
// finals, then clockwise finals.
GreenSequence affine_sequence(const AffineComponents& c);
GreenSequence affine_mgs(const Quiver& q);

// Core sequences for the fixed four-vertex type D shapes.
GreenSequence type_d_ii_core(const TypeDII& d);
GreenSequence type_d_iii_core(const TypeDIII& d);

struct Construction {
  GreenSequence sequence;
  int length = 0;
  // Set when part of the sequence came from exhaustive search.
  bool used_search = false;
};

// Minimal-length MGS built from the classification. Every result is checked
// with is_maximal_green and against min_length; a failure raises
// ConstructionInvariantViolated. UnsupportedClass for Unknown.
Construction min_mgs(const Quiver& q);

}  // namespace greenseq
