#pragma once
// Class posets: the cross-section lattice, the dual-family poset on the
// transversal d_star(n, I) with its nilpotent part and maxima, irreducible
// component bookkeeping, the rook-to-interval correspondence, and the
// conjugacy-class relation on the rook monoid (whose antisymmetry failure is
// a verified finding, reported loudly on construction).

#include <string>
#include <utility>
#include <vector>

#include "renner/bruhat.hpp"
#include "renner/cosets.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"

namespace renner {

// Subsets of the generator index set {1..S_size} under reverse inclusion:
// a distributive lattice with minimum the full set.
FinitePoset csl_dcm(int S_size);

// Poset on d_star(n, I): x <= y iff y <= x in the order on units.
FinitePoset putcha_poset_dcm(int n, const SimpleSet& I);

// Nilpotency of the class represented by y in the family attached to I:
// support of y covers the complement of I.  Throws
// std::invalid_argument("not a valid representative") unless I lies in the
// one-line ascent set of y.
bool is_nilpotent_class_dcm(int n, const SimpleSet& I, const PP& y);

struct NilMaximal {
  std::vector<PP> maxima;  // in d_star order
  bool unique = false;
};
// Maximal elements of the nilpotent part of putcha_poset_dcm(n, K).
NilMaximal nil_maximal_dcm(int n, const SimpleSet& K);

struct ComponentsDims {
  std::vector<std::pair<PP, int>> components;  // (coxeter element, dimension)
  int dim_g0 = 0;
  int dim_w0_stratum = 0;
};
// One component per Coxeter element, each of dimension dim_g0 - (n-1);
// dim_g0 defaults to n^2 - 1.  Also reports dim_g0 - l(w_0).
ComponentsDims components_and_dims(int n, int dim_g0 = -1);

// --- conjugacy classes of the rook monoid ------------------------------------

struct PutchaClassMn {
  int e_rank = 0;           // r with rep = e_r * y
  PP rep;                   // order-minimal element of orbit_gj
  std::vector<PP> orbit_gj; // conjugation orbit meet transversal, sorted
  bool nilpotent = false;
  std::string label;        // "e{r}:{y}"
};
struct PutchaMnResult {
  std::vector<PutchaClassMn> classes;
  std::vector<std::string> notes;  // e.g. canonical-representative tie-breaks
};
PutchaMnResult putcha_classes_Mn(int n);

// The conjugation-closure relation: [x] <= [y] iff some unit conjugate of
// x's representative sits below y's representative.
bool putcha_class_leq_Mn(int n, const PP& rep_x, const PP& rep_y);

// Builds the class poset from the relation above.  The relation violates
// antisymmetry (a verified finding), so this throws PosetError carrying a
// concrete two-cycle witness.
FinitePoset putcha_poset_Mn(int n);

// --- rook-to-interval correspondence -----------------------------------------

struct RookIntervalMap {
  int m = 0;
  bool even = true;
  int n = 0;      // 2m (even) or 2m+1 (odd)
  SimpleSet I;    // {1..m-1} (even) or {1..m} (odd)
  std::vector<std::pair<PP, PP>> table;  // (rook on m points, unit image)
};

// Placement recipe sending a rook on m points to a unit of degree n.
PP rook_interval_image(int m, bool even, const PP& sigma);
// Inverse readback: entry i is w(n+1-i) - (n-m), clamped to 0.
PP rook_interval_readback(int m, bool even, const PP& w);
// Full table over enumerate_rn(m); throws
// std::invalid_argument("parameters inconsistent") for unusable m.
RookIntervalMap rook_interval_map(int m, bool even);

}  // namespace renner
