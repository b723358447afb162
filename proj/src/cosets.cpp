#include "renner/cosets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace renner {

std::vector<PP> min_reps(int n, const SimpleSet& I) {
  std::vector<PP> out;
  for (const PP& w : enumerate_sn(n)) {
    const AscDes ad = ascent_descent_sets(w);
    if (std::includes(ad.asc_R.begin(), ad.asc_R.end(), I.begin(), I.end()))
      out.push_back(w);
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(int n, const SimpleSet& I,
                                       const SimpleSet& J) {
  const std::vector<PP> WI = w_parabolic(n, I);
  const std::vector<PP> WJ = w_parabolic(n, J);
  std::set<PP> seen;
  std::vector<DoubleCoset> out;
  for (const PP& x : enumerate_sn(n)) {
    if (seen.count(x)) continue;
    std::set<PP> members;
    for (const PP& u : WI)
      for (const PP& v : WJ) members.insert(multiply(multiply(u, x), v));
    seen.insert(members.begin(), members.end());

    DoubleCoset dc;
    dc.I = I;
    dc.J = J;
    dc.members.assign(members.begin(), members.end());
    int lmin = -1, lmax = -1, cmin = 0, cmax = 0;
    for (const PP& m : dc.members) {
      const int l = coxeter_length(m);
      if (lmin < 0 || l < lmin) {
        lmin = l;
        cmin = 0;
      }
      if (lmax < 0 || l > lmax) {
        lmax = l;
        cmax = 0;
      }
      if (l == lmin) {
        ++cmin;
        if (cmin == 1) dc.min_rep = m;
      }
      if (l == lmax) {
        ++cmax;
        if (cmax == 1) dc.max_rep = m;
      }
    }
    if (cmin != 1 || cmax != 1)
      throw std::runtime_error("double coset length extremes not unique");
    out.push_back(std::move(dc));
  }
  return out;
}

std::vector<PP> x_minus(int n, const SimpleSet& I, const SimpleSet& J) {
  std::vector<PP> out;
  for (const PP& w : enumerate_sn(n)) {
    const AscDes ad = ascent_descent_sets(w);
    if (std::includes(ad.asc_L.begin(), ad.asc_L.end(), I.begin(), I.end()) &&
        std::includes(ad.asc_R.begin(), ad.asc_R.end(), J.begin(), J.end()))
      out.push_back(w);
  }
  return out;
}

std::vector<PP> d_star(int n, const SimpleSet& I) { return x_minus(n, I, I); }

UWV uwv_decompose(int n, const SimpleSet& I, const SimpleSet& J, const PP& x) {
  const std::vector<PP> WI = w_parabolic(n, I);
  const std::vector<PP> WJ = w_parabolic(n, J);
  // Minimal representative of the coset of x.
  PP w = x;
  {
    std::set<PP> members;
    for (const PP& u : WI)
      for (const PP& v : WJ) members.insert(multiply(multiply(u, x), v));
    int lmin = -1;
    for (const PP& m : members) {
      const int l = coxeter_length(m);
      if (lmin < 0 || l < lmin) {
        lmin = l;
        w = m;
      }
    }
  }

  SimpleSet H;
  for (int h : I) {
    const PP sh = simple_s(n, h);
    for (int j : J)
      if (conjugate(w, simple_s(n, j)) == sh) {
        H.insert(h);
        break;
      }
  }
  const std::vector<PP> WH = w_parabolic(n, H);

  const int lx = coxeter_length(x);
  const int lw = coxeter_length(w);
  std::vector<UWV> sols;
  for (const PP& u : WI) {
    if (coxeter_length(u) + lw > lx) continue;
    // u must be shortest in u W_H.
    const int lu = coxeter_length(u);
    bool shortest = true;
    for (const PP& h : WH)
      if (coxeter_length(multiply(u, h)) < lu) {
        shortest = false;
        break;
      }
    if (!shortest) continue;
    for (const PP& v : WJ) {
      if (lu + lw + coxeter_length(v) != lx) continue;
      if (multiply(multiply(u, w), v) == x) sols.push_back(UWV{u, w, v, H});
    }
  }
  if (sols.size() != 1)
    throw std::runtime_error("u*w*v factorization not unique");
  return sols.front();
}

FinitePoset double_coset_poset(int n, const SimpleSet& I, const SimpleSet& J) {
  const auto cosets = double_cosets(n, I, J);
  std::vector<std::string> labels;
  labels.reserve(cosets.size());
  for (const auto& c : cosets) labels.push_back(to_text(c.min_rep));
  return FinitePoset::from_leq(std::move(labels), [&](int i, int j) {
    return bcr_leq(cosets[i].max_rep, cosets[j].max_rep);
  });
}

}  // namespace renner
