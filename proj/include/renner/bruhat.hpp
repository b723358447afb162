#pragma once
// The adherence (containment) order on the rook monoid R_n: a direct
// prefix-dominance comparator, the poset of all of R_n with its grading, the
// standard a*e_r*b^{-1} form with the comparator phrased on those forms, and
// the Gauss-Jordan transversal of the left W-orbits with its collapsed
// comparator.

#include <unordered_map>
#include <vector>

#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"

namespace renner {

// First i entries of sigma rearranged in non-increasing order (zeros kept),
// 1 <= i <= n.
std::vector<int> tilde_prefix(const PP& sigma, int i);

// tau <= sigma iff for every i the non-increasing i-prefix of sigma
// dominates that of tau entrywise.
bool bcr_leq(const PP& tau, const PP& sigma);

// All of R_n under the order above, elements labeled by to_text in
// enumeration order.  Construction verifies the order axioms.
FinitePoset renner_poset(int n);

// Rank function of renner_poset(n): position in the grading.  Cached per n;
// construction asserts the poset is graded.
const std::vector<int>& renner_lengths(int n);
int renner_length(const PP& x);
int renner_index(const PP& x);  // position of x in enumerate_rn order

// Generator subsets attached to the idempotent e_r, computed from
// commutation: lam = {i : s_i e_r == e_r s_i}, lam_lower = {i in lam :
// s_i e_r == e_r}, lam_upper = lam minus lam_lower.
struct TypeMap {
  SimpleSet lam, lam_lower, lam_upper;
};
TypeMap type_map(int n, int r);

// Parabolic subgroup generated by {s_i : i in I}, sorted.
std::vector<PP> w_parabolic(int n, const SimpleSet& I);

// sigma = a * e_r * b^{-1} with a, b units in normalized positions: b sends
// the sorted values of sigma to 1..r, a places them back on the domain; both
// filled ascending elsewhere.  Unique with a, b in the appropriate
// minimal-coset transversals.
struct StandardForm {
  PP a;
  int r;
  PP b;
};
StandardForm standard_form(const PP& sigma);
PP recompose(const StandardForm& sf);

// Comparator phrased on two standard forms (a, e, b), (c, f, d):
// e <= f and some w in W_lam(f) * W_lam(e) has a <= c*w and
// w^{-1}*d^{-1} <= b^{-1} in the order restricted to units.
bool sf_formula(const StandardForm& x, const StandardForm& y);

// Order comparison via standard forms.  The formula's product convention is
// mirrored relative to this library's, so it is applied to the standard
// forms of the inverses; agreement with bcr_leq is exhaustively tested.
bool bcr_leq_sf(const PP& x, const PP& y);

// Subword characterization of the order on units: u <= w iff u is a product
// of some subword of a reduced word of w.  Oracle for tests.
std::vector<PP> bruhat_downset(const PP& w);

// Gauss-Jordan transversal: domain {1..r}, strictly increasing values.
// Exactly one per left W-orbit of R_n.
std::vector<PP> gauss_jordan(int n);

struct GJDecomp {
  int r;  // rank
  PP y;   // unit with sigma = e_r * y and y^{-1} in min_reps(lam(e_r))
};
// Throws std::invalid_argument("not a GJ representative") otherwise.
GJDecomp gj_decompose(const PP& sigma);

// Collapsed comparator on the transversal: e_e*x <= e_f*y iff e <= f and
// x <= y on units.  Validates both arguments' membership.
bool gj_leq(int n, int e, const PP& x, int f, const PP& y);

// Dense order matrix over enumerate_sn(n) for hot scans.
struct BruhatBitmatrix {
  std::vector<PP> perms;
  std::unordered_map<PP, int, PPHash> index;
  std::vector<DynBitset> up;  // up[i] = {j : perms[i] <= perms[j]}
  bool leq(int i, int j) const { return up[i].test(j); }
};
BruhatBitmatrix bruhat_bitmatrix(int n);

}  // namespace renner
