#include "renner/weakorder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "renner/bruhat.hpp"
#include "renner/cosets.hpp"

namespace renner {

namespace {

// Assembles a poset from rank-raising one-step moves.  Every move must raise
// the rank function by exactly one (checked by the caller), so the move set
// is exactly the cover set of the generated order.
AnnotatedPoset from_moves(std::vector<std::string> labels,
                          std::map<std::pair<int, int>, CoverAnnotation> moves) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(moves.size());
  for (auto& [edge, ann] : moves) {
    edges.push_back(edge);
    std::sort(ann.moves.begin(), ann.moves.end());
    int n_left = 0, n_right = 0;
    for (const auto& mv : ann.moves) (mv.first == 'L' ? n_left : n_right)++;
    if (n_left > 1 || n_right > 1)
      throw std::logic_error("cover realized twice from one side");
  }
  AnnotatedPoset out{FinitePoset::from_covers(std::move(labels), edges), {}};
  out.annotations.reserve(out.poset.covers().size());
  for (const auto& c : out.poset.covers()) {
    auto it = moves.find(c);
    if (it == moves.end())
      throw std::logic_error("cover not realized by a single move");
    out.annotations.push_back(std::move(it->second));
  }
  if (out.annotations.size() != moves.size())
    throw std::logic_error("move edge is not a cover");
  return out;
}

}  // namespace

const CoverAnnotation& AnnotatedPoset::annotation_for(int lo, int hi) const {
  const auto& cv = poset.covers();
  const auto it =
      std::lower_bound(cv.begin(), cv.end(), std::make_pair(lo, hi));
  if (it == cv.end() || *it != std::make_pair(lo, hi))
    throw std::invalid_argument("not a cover");
  return annotations[static_cast<std::size_t>(it - cv.begin())];
}

PP left_move(int n, int i, const PP& x) {
  PP y = multiply(simple_s(n, i), x);
  return coxeter_length(y) > coxeter_length(x) ? y : x;
}

PP right_move(int n, int i, const PP& x) {
  PP y = multiply(x, simple_s(n, i));
  return coxeter_length(y) > coxeter_length(x) ? y : x;
}

AnnotatedPoset weak_poset_W(int n) {
  const auto elems = enumerate_sn(n);
  std::map<PP, int> idx;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
  std::map<std::pair<int, int>, CoverAnnotation> moves;
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& x : elems) labels.push_back(to_text(x));
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
    const PP& x = elems[k];
    const int lx = coxeter_length(x);
    for (int i = 1; i < n; ++i) {
      for (char side : {'L', 'R'}) {
        const PP y = side == 'L' ? left_move(n, i, x) : right_move(n, i, x);
        if (y == x) continue;
        if (coxeter_length(y) != lx + 1)
          throw std::logic_error("move does not raise length by one");
        moves[{k, idx.at(y)}].moves.emplace_back(side, i);
      }
    }
  }
  return from_moves(std::move(labels), std::move(moves));
}

FinitePoset one_sided_weak_poset(int n, char side) {
  if (side != 'L' && side != 'R')
    throw std::invalid_argument("side must be L or R");
  const auto elems = enumerate_sn(n);
  std::map<PP, int> idx;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& x : elems) labels.push_back(to_text(x));
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
    for (int i = 1; i < n; ++i) {
      const PP y = side == 'L' ? left_move(n, i, elems[k])
                               : right_move(n, i, elems[k]);
      if (y != elems[k]) edges.emplace_back(k, idx.at(y));
    }
  }
  return FinitePoset::from_covers(std::move(labels), edges);
}

std::pair<long long, long long> count_weak_covers(int n) {
  const auto elems = enumerate_sn(n);
  std::map<PP, int> idx;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
  std::map<std::pair<int, int>, std::pair<bool, bool>> seen;  // (has L, has R)
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
    const PP& x = elems[k];
    for (int i = 1; i < n; ++i) {
      const PP yl = left_move(n, i, x);
      if (yl != x) seen[{k, idx.at(yl)}].first = true;
      const PP yr = right_move(n, i, x);
      if (yr != x) seen[{k, idx.at(yr)}].second = true;
    }
  }
  long long total = static_cast<long long>(seen.size());
  long long both = 0;
  for (const auto& [edge, lr] : seen)
    if (lr.first && lr.second) ++both;
  return {total, both};
}

FinitePoset weak_poset_D(int n, const SimpleSet& I) {
  const auto D = min_reps(n, I);
  std::map<PP, int> idx;
  for (int k = 0; k < static_cast<int>(D.size()); ++k) idx[D[k]] = k;
  std::vector<std::string> labels;
  labels.reserve(D.size());
  for (const auto& x : D) labels.push_back(to_text(x));
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < static_cast<int>(D.size()); ++k) {
    const int lx = coxeter_length(D[k]);
    for (int i = 1; i < n; ++i) {
      const PP y = multiply(simple_s(n, i), D[k]);
      const auto it = idx.find(y);
      if (coxeter_length(y) == lx + 1 && it != idx.end())
        edges.emplace_back(k, it->second);
    }
  }
  return FinitePoset::from_covers(std::move(labels), edges);
}

AnnotatedPoset wew_weak_Mn(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("parameters inconsistent");
  std::vector<PP> elems;
  for (const auto& x : enumerate_rn(n))
    if (rank_of(x) == i) elems.push_back(x);
  std::map<PP, int> idx;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& x : elems) labels.push_back(to_text(x));
  std::map<std::pair<int, int>, CoverAnnotation> moves;
  for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
    const PP& x = elems[k];
    const int rx = renner_length(x);
    for (int g = 1; g < n; ++g) {
      const PP s = simple_s(n, g);
      for (char side : {'L', 'R'}) {
        const PP y = side == 'L' ? multiply(s, x) : multiply(x, s);
        const int ry = renner_length(y);
        if (ry <= rx) continue;
        if (ry != rx + 1)
          throw std::logic_error("move does not raise length by one");
        if (rank_of(y) != i) throw std::logic_error("move leaves the slice");
        moves[{k, idx.at(y)}].moves.emplace_back(side, g);
      }
    }
  }
  return from_moves(std::move(labels), std::move(moves));
}

AnnotatedPoset wew_pair_dcm(int n, const SimpleSet& I) {
  const auto D = min_reps(n, I);
  const int nd = static_cast<int>(D.size());
  std::map<PP, int> idx;
  for (int k = 0; k < nd; ++k) idx[D[k]] = k;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(nd) * nd);
  for (int a = 0; a < nd; ++a)
    for (int b = 0; b < nd; ++b)
      labels.push_back(to_text(D[a]) + "|" + to_text(D[b]));
  std::map<std::pair<int, int>, CoverAnnotation> moves;
  for (int a = 0; a < nd; ++a) {
    const int la = coxeter_length(D[a]);
    for (int b = 0; b < nd; ++b) {
      const int lb = coxeter_length(D[b]);
      const int p = a * nd + b;
      for (int i = 1; i < n; ++i) {
        const PP s = simple_s(n, i);
        const PP a2 = multiply(s, D[a]);
        auto ita = idx.find(a2);
        if (coxeter_length(a2) == la - 1 && ita != idx.end())
          moves[{p, ita->second * nd + b}].moves.emplace_back('L', i);
        const PP b2 = multiply(s, D[b]);
        auto itb = idx.find(b2);
        if (coxeter_length(b2) == lb + 1 && itb != idx.end())
          moves[{p, a * nd + itb->second}].moves.emplace_back('R', i);
      }
    }
  }
  return from_moves(std::move(labels), std::move(moves));
}

bool wew_pair_bcr_leq(const std::vector<PP>& WI, const PP& a, const PP& b,
                      const PP& c, const PP& d) {
  for (const auto& w : WI)
    if (bcr_leq(b, multiply(d, w)) && bcr_leq(multiply(c, w), a)) return true;
  return false;
}

}  // namespace renner
