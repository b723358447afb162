#pragma once
// Two-sided weak order from one-step length-raising moves: on the unit
// group, on a fixed-rank slice of the whole monoid, and on the coordinate
// pair model over a transversal of minimal coset representatives.

#include <utility>
#include <vector>

#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"

namespace renner {

struct AnnotatedPoset {
  FinitePoset poset;
  // parallel to poset.covers(), each entry in canonical move order
  std::vector<CoverAnnotation> annotations;

  // Annotation of the cover lo -> hi; throws
  // std::invalid_argument("not a cover") if (lo, hi) is not a cover.
  const CoverAnnotation& annotation_for(int lo, int hi) const;
};

// One-step moves on units: multiply by the generator on the given side if
// that raises the length, otherwise stay.
PP left_move(int n, int i, const PP& x);
PP right_move(int n, int i, const PP& x);

// Two-sided weak order on the unit group, covers annotated by their moves.
AnnotatedPoset weak_poset_W(int n);

// One-sided weak order ('L' or 'R'); unannotated.
FinitePoset one_sided_weak_poset(int n, char side);

// (total covers, covers realized from both sides) of weak_poset_W(n),
// computed without building the poset.
std::pair<long long, long long> count_weak_covers(int n);

// Left weak order on the minimal coset representatives for I, generated by
// left moves that stay inside the transversal.
FinitePoset weak_poset_D(int n, const SimpleSet& I);

// Two-sided weak order on the rank-i slice of the whole monoid, moves
// measured by the graded rank of the full order.
AnnotatedPoset wew_weak_Mn(int n, int i);

// Pair model on D x D (D = min_reps(n, I), element order a-major, labels
// "a|b"): left moves shorten the first coordinate within D, right moves
// lengthen the second within D.
AnnotatedPoset wew_pair_dcm(int n, const SimpleSet& I);

// Coordinate formula for the full order on the slice: (a,b) <= (c,d) iff
// some w in WI has b <= d*w and c*w <= a.
bool wew_pair_bcr_leq(const std::vector<PP>& WI, const PP& a, const PP& b,
                      const PP& c, const PP& d);

}  // namespace renner
