#include "renner/bruhat.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace renner {

std::vector<int> tilde_prefix(const PP& sigma, int i) {
  if (i < 1 || i > degree(sigma)) throw std::out_of_range("index out of range");
  std::vector<int> out(sigma.begin(), sigma.begin() + i);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

bool bcr_leq(const PP& tau, const PP& sigma) {
  if (tau.size() != sigma.size()) throw DegreeMismatchError{};
  const int n = degree(tau);
  // Maintain both non-increasing prefixes incrementally.
  std::vector<int> a, b;
  a.reserve(n);
  b.reserve(n);
  for (int i = 0; i < n; ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), tau[i], std::greater<int>()),
             tau[i]);
    b.insert(std::upper_bound(b.begin(), b.end(), sigma[i], std::greater<int>()),
             sigma[i]);
    for (int j = 0; j <= i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

FinitePoset renner_poset(int n) {
  const std::vector<PP> elems = enumerate_rn(n);
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const PP& x : elems) labels.push_back(to_text(x));
  return FinitePoset::from_leq(
      std::move(labels),
      [&](int i, int j) { return bcr_leq(elems[i], elems[j]); });
}

namespace {

struct RennerContext {
  int n = 0;
  std::vector<PP> elements;
  std::unordered_map<PP, int, PPHash> index;
  std::vector<int> lengths;
};

const RennerContext& renner_context(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<RennerContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<RennerContext>();
  ctx->n = n;
  ctx->elements = enumerate_rn(n);
  for (int i = 0; i < static_cast<int>(ctx->elements.size()); ++i)
    ctx->index.emplace(ctx->elements[i], i);
  const FinitePoset P = renner_poset(n);
  const auto ranks = P.graded_ranks();
  if (!ranks) throw PosetError("order on R_n is not graded");
  ctx->lengths = *ranks;
  auto& slot = cache[n];
  slot = std::move(ctx);
  return *slot;
}

}  // namespace

const std::vector<int>& renner_lengths(int n) {
  return renner_context(n).lengths;
}

int renner_index(const PP& x) {
  const auto& ctx = renner_context(degree(x));
  const auto it = ctx.index.find(x);
  if (it == ctx.index.end())
    throw std::invalid_argument("not a partial permutation");
  return it->second;
}

int renner_length(const PP& x) {
  const auto& ctx = renner_context(degree(x));
  return ctx.lengths[ctx.index.at(x)];
}

TypeMap type_map(int n, int r) {
  const PP e = idem_e(n, r);
  TypeMap tm;
  for (int i = 1; i < n; ++i) {
    const PP s = simple_s(n, i);
    if (multiply(s, e) == multiply(e, s)) {
      tm.lam.insert(i);
      if (multiply(s, e) == e)
        tm.lam_lower.insert(i);
      else
        tm.lam_upper.insert(i);
    }
  }
  return tm;
}

std::vector<PP> w_parabolic(int n, const SimpleSet& I) {
  std::set<PP> seen;
  std::vector<PP> frontier{identity_pp(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<PP> next;
    for (const PP& w : frontier)
      for (int i : I) {
        PP u = multiply(simple_s(n, i), w);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

StandardForm standard_form(const PP& sigma) {
  const int n = degree(sigma);
  const int r = rank_of(sigma);
  std::vector<int> values;
  for (int v : sigma)
    if (v != 0) values.push_back(v);
  std::sort(values.begin(), values.end());

  PP b(n, 0);
  for (int j = 0; j < r; ++j) b[values[j] - 1] = j + 1;
  for (int k = 0, next = r + 1; k < n; ++k)
    if (b[k] == 0) b[k] = next++;

  PP a(n, 0);
  for (int d = 1; d <= n; ++d)
    if (sigma[d - 1] != 0) a[d - 1] = b[sigma[d - 1] - 1];
  for (int k = 0, next = r + 1; k < n; ++k)
    if (a[k] == 0) a[k] = next++;

  return StandardForm{std::move(a), r, std::move(b)};
}

PP recompose(const StandardForm& sf) {
  const int n = degree(sf.a);
  return multiply(multiply(sf.a, idem_e(n, sf.r)), inverse(sf.b));
}

bool sf_formula(const StandardForm& x, const StandardForm& y) {
  if (x.r > y.r) return false;
  const int n = degree(x.a);
  const std::vector<PP> We = w_parabolic(n, type_map(n, x.r).lam);
  const std::vector<PP> Wf = w_parabolic(n, type_map(n, y.r).lam);
  std::set<PP> wset;
  for (const PP& u : Wf)
    for (const PP& v : We) wset.insert(multiply(u, v));
  const PP binv = inverse(x.b);
  const PP dinv = inverse(y.b);
  for (const PP& w : wset)
    if (bcr_leq(x.a, multiply(y.a, w)) &&
        bcr_leq(multiply(inverse(w), dinv), binv))
      return true;
  return false;
}

bool bcr_leq_sf(const PP& x, const PP& y) {
  return sf_formula(standard_form(inverse(x)), standard_form(inverse(y)));
}

std::vector<PP> bruhat_downset(const PP& w) {
  const int n = degree(w);
  const std::vector<int> word = reduced_word(w);
  const int L = static_cast<int>(word.size());
  std::set<PP> out;
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    std::vector<int> sub;
    for (int k = 0; k < L; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    PP e = identity_pp(n);
    for (auto it = sub.rbegin(); it != sub.rend(); ++it)
      e = multiply(simple_s(n, *it), e);
    if (coxeter_length(e) == static_cast<int>(sub.size())) out.insert(e);
  }
  return {out.begin(), out.end()};
}

std::vector<PP> gauss_jordan(int n) {
  std::vector<PP> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> vals(r);
    for (int k = 0; k < r; ++k) vals[k] = k + 1;
    while (true) {
      PP x = zero_pp(n);
      for (int k = 0; k < r; ++k) x[k] = vals[k];
      out.push_back(std::move(x));
      int i = r - 1;
      while (i >= 0 && vals[i] == n - (r - 1 - i)) --i;
      if (i < 0) break;
      ++vals[i];
      for (int j = i + 1; j < r; ++j) vals[j] = vals[j - 1] + 1;
    }
  }
  return out;
}

GJDecomp gj_decompose(const PP& sigma) {
  const int n = degree(sigma);
  const StandardForm sf = standard_form(sigma);
  if (sf.a != identity_pp(n))
    throw std::invalid_argument("not a GJ representative");
  PP y = inverse(sf.b);
  if (multiply(idem_e(n, sf.r), y) != sigma)
    throw std::invalid_argument("not a GJ representative");
  return GJDecomp{sf.r, std::move(y)};
}

namespace {

bool in_min_reps_inverse(int n, int r, const PP& x) {
  // x lies in min_reps(lam(e_r))^{-1} iff lam(e_r) is contained in the
  // one-line ascent set of x.
  const TypeMap tm = type_map(n, r);
  const AscDes ad = ascent_descent_sets(x);
  return std::includes(ad.asc_L.begin(), ad.asc_L.end(), tm.lam.begin(),
                       tm.lam.end());
}

}  // namespace

bool gj_leq(int n, int e, const PP& x, int f, const PP& y) {
  if (e < 0 || e > n || f < 0 || f > n)
    throw std::out_of_range("index out of range");
  if (!is_permutation(x) || !is_permutation(y) ||
      !in_min_reps_inverse(n, e, x) || !in_min_reps_inverse(n, f, y))
    throw std::invalid_argument("not a GJ representative");
  return e <= f && bcr_leq(x, y);
}

BruhatBitmatrix bruhat_bitmatrix(int n) {
  BruhatBitmatrix bm;
  bm.perms = enumerate_sn(n);
  const int m = static_cast<int>(bm.perms.size());
  for (int i = 0; i < m; ++i) bm.index.emplace(bm.perms[i], i);
  bm.up.assign(m, DynBitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (bcr_leq(bm.perms[i], bm.perms[j])) bm.up[i].set(j);
  return bm;
}

}  // namespace renner
