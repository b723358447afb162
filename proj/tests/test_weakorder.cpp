#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "renner/bruhat.hpp"
#include "renner/cosets.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"
#include "renner/weakorder.hpp"

using namespace renner;

namespace {

using NamedCover = std::pair<std::string, std::string>;

std::set<NamedCover> named_covers(const FinitePoset& P) {
  std::set<NamedCover> out;
  for (const auto& [lo, hi] : P.covers()) out.insert({P.label(lo), P.label(hi)});
  return out;
}

bool has_both_sides(const CoverAnnotation& ann) {
  bool l = false, r = false;
  for (const auto& [side, i] : ann.moves) (side == 'L' ? l : r) = true;
  return l && r;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<SimpleSet> all_subsets(int n, bool proper) {
  std::vector<SimpleSet> out;
  const int top = n - 1;
  for (int mask = 0; mask < (1 << top); ++mask) {
    SimpleSet I;
    for (int i = 1; i <= top; ++i)
      if (mask >> (i - 1) & 1) I.insert(i);
    if (proper && static_cast<int>(I.size()) == top) continue;
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(),
            [](const SimpleSet& a, const SimpleSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

}  // namespace

TEST_CASE("two-sided weak order on units: frozen degree data for n=3 and the "
          "(1234,2134) cover") {
  const auto W3 = weak_poset_W(3);
  const std::set<NamedCover> expect = {
      {"123", "213"}, {"123", "132"}, {"213", "231"}, {"213", "312"},
      {"132", "312"}, {"132", "231"}, {"231", "321"}, {"312", "321"}};
  CHECK(named_covers(W3.poset) == expect);
  std::set<NamedCover> deg2;
  for (std::size_t k = 0; k < W3.annotations.size(); ++k)
    if (has_both_sides(W3.annotations[k])) {
      const auto& [lo, hi] = W3.poset.covers()[k];
      deg2.insert({W3.poset.label(lo), W3.poset.label(hi)});
    }
  CHECK(deg2 == std::set<NamedCover>{
                    {"123", "213"}, {"123", "132"}, {"231", "321"},
                    {"312", "321"}});

  const auto W4 = weak_poset_W(4);
  int lo = -1, hi = -1;
  for (int k = 0; k < W4.poset.size(); ++k) {
    if (W4.poset.label(k) == "1234") lo = k;
    if (W4.poset.label(k) == "2134") hi = k;
  }
  REQUIRE(lo >= 0);
  REQUIRE(hi >= 0);
  const auto& ann = W4.annotation_for(lo, hi);
  CHECK(ann.moves == std::vector<Move>{{'L', 1}, {'R', 1}});
  CHECK(ann.degree() == 2);
  CHECK_THROWS_WITH_AS(W4.annotation_for(hi, lo), "not a cover",
                       std::invalid_argument);
}

TEST_CASE("two-sided weak order on units: cover counts, small-ascent "
          "bijection, grading by length") {
  for (int m : {3, 4, 5}) {
    const int n = m - 1;
    const auto W = weak_poset_W(m);
    long long total = static_cast<long long>(W.poset.covers().size());
    long long d2 = 0;
    for (const auto& ann : W.annotations) {
      int nl = 0, nr = 0;
      for (const auto& [side, i] : ann.moves) (side == 'L' ? nl : nr)++;
      CHECK(nl <= 1);
      CHECK(nr <= 1);
      if (nl && nr) ++d2;
    }
    CHECK(total == static_cast<long long>(n) * n * factorial(n));
    CHECK(d2 == static_cast<long long>(n) * factorial(n));
    CHECK(count_weak_covers(m) == std::make_pair(total, d2));

    // degree-2 covers are exactly the swaps of adjacent consecutive letters
    std::set<std::pair<int, int>> small;
    const auto elems = enumerate_sn(m);
    std::map<PP, int> idx;
    for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
    for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
      const PP& x = elems[k];
      for (int i = 0; i + 1 < m; ++i)
        if (x[i + 1] == x[i] + 1) {
          PP y = x;
          std::swap(y[i], y[i + 1]);
          small.insert({k, idx.at(y)});
        }
    }
    std::set<std::pair<int, int>> got;
    for (std::size_t k = 0; k < W.annotations.size(); ++k)
      if (has_both_sides(W.annotations[k])) got.insert(W.poset.covers()[k]);
    CHECK(got == small);

    const auto ranks = W.poset.graded_ranks();
    REQUIRE(ranks.has_value());
    for (int k = 0; k < W.poset.size(); ++k)
      CHECK((*ranks)[k] == coxeter_length(elems[k]));
  }
}

TEST_CASE("one-sided weak orders embed in the two-sided order; basic moves") {
  const auto W4 = weak_poset_W(4);
  const auto L4 = one_sided_weak_poset(4, 'L');
  const auto R4 = one_sided_weak_poset(4, 'R');
  // same element order (lexicographic), so indices are directly comparable
  REQUIRE(L4.labels() == W4.poset.labels());
  REQUIRE(R4.labels() == W4.poset.labels());
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      if (L4.leq(a, b)) CHECK(W4.poset.leq(a, b));
      if (R4.leq(a, b)) CHECK(W4.poset.leq(a, b));
    }

  const PP w0 = from_text("4321");
  CHECK(left_move(4, 2, w0) == w0);
  CHECK(left_move(4, 1, identity_pp(4)) == from_text("2134"));
  CHECK_THROWS_WITH_AS(one_sided_weak_poset(3, 'X'), "side must be L or R",
                       std::invalid_argument);
}

TEST_CASE("left weak order on three units: graded, not balanced, no "
          "increasing-chain labeling") {
  const auto P = one_sided_weak_poset(3, 'L');
  const auto ranks = P.graded_ranks();
  REQUIRE(ranks.has_value());
  auto sorted_ranks = *ranks;
  std::sort(sorted_ranks.begin(), sorted_ranks.end());
  CHECK(sorted_ranks == std::vector<int>{0, 1, 1, 2, 2, 3});
  const auto eu = P.eulerian_check();
  CHECK_FALSE(eu.eulerian);
  CHECK(P.label(eu.x) == "123");
  CHECK(P.label(eu.y) == "231");
  const auto el = el_search(P);
  CHECK(el.status == ElSearchResult::Status::None);
  CHECK(el.method == "forced-chain refutation");
}

TEST_CASE("rank-one slice of the degree-2 monoid is a diamond with all "
          "covers one-sided") {
  const auto A = wew_weak_Mn(2, 1);
  CHECK(named_covers(A.poset) ==
        std::set<NamedCover>{
            {"01", "10"}, {"01", "02"}, {"10", "20"}, {"02", "20"}});
  for (const auto& ann : A.annotations) {
    std::set<char> sides;
    for (const auto& [side, i] : ann.moves) sides.insert(side);
    CHECK(sides.size() == 1);
  }
}

TEST_CASE("slice weak orders: two-sided covers exist exactly from rank two "
          "up; frozen sizes") {
  struct Row {
    int n, i, elems, covers;
  };
  const std::vector<Row> frozen = {{3, 2, 18, 32},  {3, 3, 6, 8},
                                   {4, 1, 16, 24},  {4, 2, 72, 171},
                                   {4, 3, 96, 252}, {4, 4, 24, 54}};
  for (int n : {3, 4}) {
    for (int i = 0; i <= n; ++i) {
      const auto A = wew_weak_Mn(n, i);
      bool has2 = false;
      for (const auto& ann : A.annotations) {
        int nl = 0, nr = 0;
        for (const auto& [side, g] : ann.moves) (side == 'L' ? nl : nr)++;
        CHECK(nl <= 1);
        CHECK(nr <= 1);
        if (nl && nr) has2 = true;
      }
      CHECK(has2 == (i >= 2));
      CHECK(A.poset.is_graded());
      for (const auto& row : frozen)
        if (row.n == n && row.i == i) {
          CHECK(A.poset.size() == row.elems);
          CHECK(static_cast<int>(A.poset.covers().size()) == row.covers);
        }
    }
  }
}

TEST_CASE("full-rank slice equals the two-sided weak order on units") {
  for (int n : {3, 4}) {
    const auto A = wew_weak_Mn(n, n);
    const auto W = weak_poset_W(n);
    CHECK(named_covers(A.poset) == named_covers(W.poset));
  }
}

TEST_CASE("rank-two slice of the degree-3 monoid: the idempotent cover is "
          "two-sided") {
  const auto A = wew_weak_Mn(3, 2);
  const PP e2 = idem_e(3, 2);
  const PP s1e2 = multiply(simple_s(3, 1), e2);
  CHECK(s1e2 == multiply(e2, simple_s(3, 1)));
  CHECK(s1e2 != e2);
  int lo = -1, hi = -1;
  for (int k = 0; k < A.poset.size(); ++k) {
    if (A.poset.label(k) == to_text(e2)) lo = k;
    if (A.poset.label(k) == to_text(s1e2)) hi = k;
  }
  REQUIRE(lo >= 0);
  REQUIRE(hi >= 0);
  CHECK(A.annotation_for(lo, hi).moves ==
        std::vector<Move>{{'L', 1}, {'R', 1}});
}

TEST_CASE("rank-one slice: weak order coincides with the restriction of the "
          "full order") {
  for (int n : {2, 3, 4}) {
    const auto A = wew_weak_Mn(n, 1);
    std::vector<PP> elems;
    for (const auto& x : enumerate_rn(n))
      if (rank_of(x) == 1) elems.push_back(x);
    const auto B = FinitePoset::from_leq(A.poset.labels(), [&](int a, int b) {
      return bcr_leq(elems[a], elems[b]);
    });
    REQUIRE(A.poset.size() == B.size());
    for (int a = 0; a < B.size(); ++a)
      for (int b = 0; b < B.size(); ++b)
        CHECK(A.poset.leq(a, b) == B.leq(a, b));
    CHECK(FinitePoset::isomorphism(A.poset, B).has_value());
  }
}

TEST_CASE("transversal left order: move-generated version equals the induced "
          "suborder") {
  for (int n : {3, 4}) {
    const auto L = one_sided_weak_poset(n, 'L');
    const auto elems = enumerate_sn(n);
    std::map<PP, int> idx;
    for (int k = 0; k < static_cast<int>(elems.size()); ++k) idx[elems[k]] = k;
    for (const auto& I : all_subsets(n, false)) {
      const auto D = min_reps(n, I);
      const auto G = weak_poset_D(n, I);
      REQUIRE(G.size() == static_cast<int>(D.size()));
      for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b)
          CHECK(G.leq(a, b) == L.leq(idx.at(D[a]), idx.at(D[b])));
    }
  }
}

TEST_CASE("pair model: grading formula, product decomposition, lattice, all "
          "covers one-sided") {
  for (int n : {3, 4}) {
    for (const auto& I : all_subsets(n, false)) {
      const auto A = wew_pair_dcm(n, I);
      const auto D = min_reps(n, I);
      const int nd = static_cast<int>(D.size());
      REQUIRE(A.poset.size() == nd * nd);
      int maxl = 0;
      for (const auto& x : D) maxl = std::max(maxl, coxeter_length(x));
      const auto ranks = A.poset.graded_ranks();
      REQUIRE(ranks.has_value());
      for (int a = 0; a < nd; ++a)
        for (int b = 0; b < nd; ++b)
          CHECK((*ranks)[a * nd + b] ==
                coxeter_length(D[b]) + maxl - coxeter_length(D[a]));

      const auto DL = weak_poset_D(n, I);
      const auto prod = FinitePoset::product(DL.opposite(), DL);
      REQUIRE(prod.size() == A.poset.size());
      CHECK(std::set<std::pair<int, int>>(prod.covers().begin(),
                                          prod.covers().end()) ==
            std::set<std::pair<int, int>>(A.poset.covers().begin(),
                                          A.poset.covers().end()));

      CHECK(A.poset.lattice_check().lattice);
      for (const auto& ann : A.annotations) CHECK(ann.degree() == 1);
    }
  }
}

TEST_CASE("pair model matches the rank-one slice directly and through the "
          "coordinate formula") {
  for (int n : {3, 4}) {
    SimpleSet I;
    for (int i = 2; i < n; ++i) I.insert(i);
    const auto A = wew_pair_dcm(n, I);
    const auto direct = wew_weak_Mn(n, 1);
    const auto D = min_reps(n, I);
    const int nd = static_cast<int>(D.size());
    REQUIRE(A.poset.size() == direct.poset.size());
    const PP e1 = idem_e(n, 1);
    std::vector<int> to_direct(A.poset.size(), -1);
    std::map<std::string, int> dir_idx;
    for (int k = 0; k < direct.poset.size(); ++k)
      dir_idx[direct.poset.label(k)] = k;
    std::vector<PP> products(A.poset.size());
    for (int a = 0; a < nd; ++a)
      for (int b = 0; b < nd; ++b) {
        const PP x = multiply(multiply(D[a], e1), inverse(D[b]));
        products[a * nd + b] = x;
        to_direct[a * nd + b] = dir_idx.at(to_text(x));
      }
    CHECK(std::set<int>(to_direct.begin(), to_direct.end()).size() ==
          to_direct.size());
    std::set<std::pair<int, int>> mapped;
    for (const auto& [lo, hi] : A.poset.covers())
      mapped.insert({to_direct[lo], to_direct[hi]});
    CHECK(mapped == std::set<std::pair<int, int>>(
                        direct.poset.covers().begin(),
                        direct.poset.covers().end()));

    // coordinate formula computes the restriction of the full order
    const auto WI = w_parabolic(n, I);
    for (int p = 0; p < A.poset.size(); ++p)
      for (int q = 0; q < A.poset.size(); ++q) {
        const int pa = p / nd, pb = p % nd, qa = q / nd, qb = q % nd;
        CHECK(wew_pair_bcr_leq(WI, D[pa], D[pb], D[qa], D[qb]) ==
              bcr_leq(products[p], products[q]));
      }
  }
}

TEST_CASE("pair model: five order conditions stand or fall together, holding "
          "exactly when one generator is missing from I") {
  struct Case {
    int n;
    SimpleSet I;
  };
  const std::vector<Case> cases = {{3, {}},  {3, {1}}, {3, {2}},
                                   {4, {1}}, {4, {1, 2}}, {4, {2, 3}}};
  for (const auto& cs : cases) {
    const auto A = wew_pair_dcm(cs.n, cs.I);
    const auto D = min_reps(cs.n, cs.I);
    const int nd = static_cast<int>(D.size());
    const auto WI = w_parabolic(cs.n, cs.I);
    const auto B = FinitePoset::from_leq(
        A.poset.labels(), [&](int p, int q) {
          return wew_pair_bcr_leq(WI, D[p / nd], D[p % nd], D[q / nd],
                                  D[q % nd]);
        });
    const bool c1 = B.lattice_check().lattice;
    const bool c2 = c1 ? B.distributive_check().distributive : false;
    const auto DL = weak_poset_D(cs.n, cs.I);
    const bool c3_factor = DL.distributive_check().distributive;
    const bool c3_direct = A.poset.distributive_check().distributive;
    CHECK(c3_direct == c3_factor);
    bool c4 = true;
    for (int p = 0; p < A.poset.size() && c4; ++p)
      for (int q = 0; q < A.poset.size(); ++q)
        if (A.poset.leq(p, q) != B.leq(p, q)) {
          c4 = false;
          break;
        }
    const bool c5 = static_cast<int>(cs.I.size()) == cs.n - 2;
    CHECK(c1 == c5);
    CHECK(c2 == c5);
    CHECK(c3_factor == c5);
    CHECK(c4 == c5);
  }
}

TEST_CASE("pair model labeling search: found in the distributive case, "
          "refuted otherwise") {
  const auto good = wew_pair_dcm(3, {1});
  const auto found = el_search(good.poset);
  CHECK(found.status == ElSearchResult::Status::Found);
  CHECK(found.method == "join-irreducible labeling");

  const auto bad = wew_pair_dcm(3, {});
  const auto refuted = el_search(bad.poset);
  CHECK(refuted.status == ElSearchResult::Status::None);
  CHECK(refuted.method == "forced-chain refutation");
}
