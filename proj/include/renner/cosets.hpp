#pragma once
// Parabolic double cosets W_I x W_J in the symmetric group: the partition,
// unique shortest/longest representatives, the descent-style transversals,
// the unique length-additive u*w*v factorization, and the poset of cosets.

#include "renner/bruhat.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"

namespace renner {

// Minimal-length transversal for W_I: I inside the letter ascents.
std::vector<PP> min_reps(int n, const SimpleSet& I);

struct DoubleCoset {
  SimpleSet I, J;
  std::vector<PP> members;  // sorted
  PP min_rep, max_rep;      // unique length extremes (verified on build)
};

// Partition of S_n into W_I x W_J double cosets {u*x*v}, in order of first
// appearance along the standard enumeration.
std::vector<DoubleCoset> double_cosets(int n, const SimpleSet& I,
                                       const SimpleSet& J);

// {w : I within the one-line ascents, J within the letter ascents}; equals
// the set of minimal double-coset representatives.
std::vector<PP> x_minus(int n, const SimpleSet& I, const SimpleSet& J);
std::vector<PP> d_star(int n, const SimpleSet& I);

struct UWV {
  PP u, w, v;
  SimpleSet H;
};
// The unique factorization x = u * w * v with w the minimal representative
// of the coset of x, v in W_J, u in W_I shortest in its coset of
// W_H where H = {h in I : some s_j (j in J) conjugates through w to s_h},
// and lengths adding up.  Throws if uniqueness fails.
UWV uwv_decompose(int n, const SimpleSet& I, const SimpleSet& J, const PP& x);

// The cosets ordered by comparing maximal representatives (equivalently, as
// tests confirm, minimal ones); labeled by their minimal representatives.
FinitePoset double_coset_poset(int n, const SimpleSet& I, const SimpleSet& J);

}  // namespace renner
