#include "renner/putcha.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace renner {

namespace {

std::vector<SimpleSet> subsets_by_size(int S_size) {
  std::vector<SimpleSet> out;
  std::vector<int> universe;
  for (int i = 1; i <= S_size; ++i) universe.push_back(i);
  for (int k = 0; k <= S_size; ++k) {
    std::vector<int> pick(k);
    // combinations of universe of size k, lexicographic
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      SimpleSet s;
      for (int i = 0; i < k; ++i) s.insert(universe[idx[i]]);
      out.push_back(std::move(s));
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && idx[i] == S_size - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

FinitePoset csl_dcm(int S_size) {
  if (S_size < 0) throw std::invalid_argument("parameters inconsistent");
  auto subs = subsets_by_size(S_size);
  std::vector<std::string> labels;
  labels.reserve(subs.size());
  for (const auto& s : subs) labels.push_back(subset_to_text(s));
  return FinitePoset::from_leq(labels, [&](int a, int b) {
    return std::includes(subs[a].begin(), subs[a].end(), subs[b].begin(),
                         subs[b].end());
  });
}

FinitePoset putcha_poset_dcm(int n, const SimpleSet& I) {
  auto elems = d_star(n, I);
  std::sort(elems.begin(), elems.end());
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& e : elems) labels.push_back(to_text(e));
  return FinitePoset::from_leq(labels, [&](int x, int y) {
    return bcr_leq(elems[y], elems[x]);
  });
}

bool is_nilpotent_class_dcm(int n, const SimpleSet& I, const PP& y) {
  if (degree(y) != n || !is_permutation(y))
    throw std::invalid_argument("not a valid representative");
  const auto ad = ascent_descent_sets(y);
  if (!std::includes(ad.asc_L.begin(), ad.asc_L.end(), I.begin(), I.end()))
    throw std::invalid_argument("not a valid representative");
  const auto sup = support(y);
  for (int i = 1; i < n; ++i)
    if (!I.count(i) && !sup.count(i)) return false;
  return true;
}

NilMaximal nil_maximal_dcm(int n, const SimpleSet& K) {
  auto elems = d_star(n, K);
  std::sort(elems.begin(), elems.end());
  std::vector<int> nil;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (is_nilpotent_class_dcm(n, K, elems[i])) nil.push_back(i);
  NilMaximal out;
  for (int k : nil) {
    bool strictly_below = false;
    for (int j : nil) {
      // order on the class poset: k <= j iff elems[j] <= elems[k] in the
      // order on units
      if (j != k && bcr_leq(elems[j], elems[k])) {
        strictly_below = true;
        break;
      }
    }
    if (!strictly_below) out.maxima.push_back(elems[k]);
  }
  out.unique = out.maxima.size() == 1;
  return out;
}

ComponentsDims components_and_dims(int n, int dim_g0) {
  if (dim_g0 < 0) dim_g0 = n * n - 1;
  ComponentsDims out;
  out.dim_g0 = dim_g0;
  out.dim_w0_stratum = dim_g0 - n * (n - 1) / 2;
  auto cox = coxeter_elements(n);
  std::sort(cox.begin(), cox.end());
  const int dim_each = dim_g0 - (n - 1);
  for (auto& c : cox) out.components.emplace_back(std::move(c), dim_each);
  return out;
}

PutchaMnResult putcha_classes_Mn(int n) {
  PutchaMnResult out;
  const auto gj = gauss_jordan(n);
  std::set<PP> gjset(gj.begin(), gj.end());
  const auto units = enumerate_sn(n);
  std::set<PP> seen;
  for (const auto& g : gj) {
    if (seen.count(g)) continue;
    std::set<PP> orbit;
    for (const auto& w : units) orbit.insert(conjugate(w, g));
    std::vector<PP> og;
    for (const auto& x : orbit)
      if (gjset.count(x)) og.push_back(x);
    std::sort(og.begin(), og.end());
    for (const auto& x : og) seen.insert(x);
    std::vector<PP> mins;
    for (const auto& x : og) {
      bool minimal = true;
      for (const auto& y : og)
        if (y != x && bcr_leq(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) mins.push_back(x);
    }
    if (mins.size() != 1)
      out.notes.push_back("orbit of " + to_text(g) + " has " +
                          std::to_string(mins.size()) +
                          " order-minimal representatives; using the "
                          "lexicographically least");
    PutchaClassMn cls;
    cls.rep = mins.front();  // og is sorted, so mins is sorted
    const auto dec = gj_decompose(cls.rep);
    cls.e_rank = dec.r;
    cls.label = "e" + std::to_string(dec.r) + ":" + to_text(dec.y);
    cls.orbit_gj = std::move(og);
    cls.nilpotent = is_nilpotent(cls.rep);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

bool putcha_class_leq_Mn(int n, const PP& rep_x, const PP& rep_y) {
  for (const auto& w : enumerate_sn(n))
    if (bcr_leq(conjugate(w, rep_x), rep_y)) return true;
  return false;
}

FinitePoset putcha_poset_Mn(int n) {
  const auto res = putcha_classes_Mn(n);
  std::vector<std::string> labels;
  labels.reserve(res.classes.size());
  for (const auto& c : res.classes) labels.push_back(c.label);
  return FinitePoset::from_leq(labels, [&](int i, int j) {
    return putcha_class_leq_Mn(n, res.classes[i].rep, res.classes[j].rep);
  });
}

PP rook_interval_image(int m, bool even, const PP& sigma) {
  if (m < 1 || degree(sigma) != m || !is_partial_perm(sigma))
    throw std::invalid_argument("parameters inconsistent");
  PP w(2 * m, 0);
  for (int j = 1; j <= m; ++j) {
    const int v = sigma[m - j];
    if (v != 0) w[m + j - 1] = m + v;
  }
  const int k = m - rank_of(sigma);
  std::set<int> used_larges;
  for (int v : sigma)
    if (v != 0) used_larges.insert(m + v);
  std::vector<int> block1;
  for (int a = 1; a <= m - k; ++a) block1.push_back(a);
  for (int a = m + 1; a <= 2 * m; ++a)
    if (!used_larges.count(a)) block1.push_back(a);
  for (int i = 0; i < m; ++i) w[i] = block1[i];
  int next_small = m - k + 1;
  for (int i = m; i < 2 * m; ++i)
    if (w[i] == 0) w[i] = next_small++;
  if (!even) {
    PP shifted(2 * m + 1);
    shifted[0] = 1;
    for (int i = 0; i < 2 * m; ++i) shifted[i + 1] = w[i] + 1;
    return shifted;
  }
  return w;
}

PP rook_interval_readback(int m, bool even, const PP& w) {
  const int n = even ? 2 * m : 2 * m + 1;
  if (m < 1 || degree(w) != n || !is_permutation(w))
    throw std::invalid_argument("parameters inconsistent");
  const int off = n - m;
  PP sigma(m, 0);
  for (int i = 1; i <= m; ++i) {
    const int v = w[n - i] - off;
    sigma[i - 1] = v > 0 ? v : 0;
  }
  return sigma;
}

RookIntervalMap rook_interval_map(int m, bool even) {
  const int n = even ? 2 * m : 2 * m + 1;
  if (m < 1 || m > kMaxEnumerateRn || n > kMaxEnumerateSn)
    throw std::invalid_argument("parameters inconsistent");
  RookIntervalMap out;
  out.m = m;
  out.even = even;
  out.n = n;
  const int top = even ? m - 1 : m;
  for (int i = 1; i <= top; ++i) out.I.insert(i);
  for (const auto& sigma : enumerate_rn(m)) {
    PP w = rook_interval_image(m, even, sigma);
    if (rook_interval_readback(m, even, w) != sigma)
      throw std::logic_error("rook interval readback mismatch");
    out.table.emplace_back(sigma, std::move(w));
  }
  return out;
}

}  // namespace renner
