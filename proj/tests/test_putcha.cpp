#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "renner/bruhat.hpp"
#include "renner/cosets.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"
#include "renner/putcha.hpp"

using namespace renner;

namespace {

std::vector<PP> sorted_d_star(int n, const SimpleSet& I) {
  auto v = d_star(n, I);
  std::sort(v.begin(), v.end());
  return v;
}

bool is_linear_with_support(const PP& w, const SimpleSet& target) {
  return coxeter_length(w) == static_cast<int>(support(w).size()) &&
         support(w) == target;
}

}  // namespace

TEST_CASE("class poset on the transversal: empty set gives the opposite of "
          "the order on units") {
  for (int n : {3, 4}) {
    const auto elems = sorted_d_star(n, {});
    REQUIRE(elems.size() == enumerate_sn(n).size());
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(to_text(e));
    const auto P = putcha_poset_dcm(n, {});
    const auto B = FinitePoset::from_leq(labels, [&](int x, int y) {
      return bcr_leq(elems[x], elems[y]);
    });
    const auto Bop = B.opposite();
    REQUIRE(P.size() == Bop.size());
    for (int i = 0; i < P.size(); ++i)
      for (int j = 0; j < P.size(); ++j) CHECK(P.leq(i, j) == Bop.leq(i, j));
  }
}

TEST_CASE("class poset on the transversal: (n=4, I={1}) is isomorphic to the "
          "full order for degree 2") {
  const auto P = putcha_poset_dcm(4, {1});
  const auto R = renner_poset(2);
  REQUIRE(P.size() == 7);
  REQUIRE(R.size() == 7);
  CHECK(FinitePoset::isomorphism(P, R).has_value());
}

TEST_CASE("class poset on the transversal: (n=5, I={1,2}) matches the frozen "
          "seven-element diagram") {
  const auto P = putcha_poset_dcm(5, {1, 2});
  REQUIRE(P.size() == 7);
  const std::set<std::string> want_nodes = {"14523", "12543", "12453", "12534",
                                            "12354", "12435", "12345"};
  std::set<std::string> got_nodes(P.labels().begin(), P.labels().end());
  CHECK(got_nodes == want_nodes);

  const std::set<std::pair<std::string, std::string>> want_covers = {
      {"14523", "12543"}, {"12543", "12453"}, {"12543", "12534"},
      {"12453", "12354"}, {"12453", "12435"}, {"12534", "12435"},
      {"12534", "12354"}, {"12354", "12345"}, {"12435", "12345"}};
  std::set<std::pair<std::string, std::string>> got_covers;
  for (const auto& [lo, hi] : P.covers())
    got_covers.insert({P.label(lo), P.label(hi)});
  CHECK(got_covers == want_covers);

  const auto mins = P.minimal_elements();
  REQUIRE(mins.size() == 1);
  CHECK(P.label(mins[0]) == "14523");
  CHECK(P.is_bounded());
}

TEST_CASE("nilpotent classes on the transversal: support criterion and the "
          "rank-one product oracle agree") {
  for (int n : {3, 4}) {
    const auto tm = type_map(n, 1);
    const auto e1 = idem_e(n, 1);
    for (const auto& x : min_reps(n, tm.lam)) {
      const PP y = inverse(x);
      CHECK(is_nilpotent_class_dcm(n, tm.lam, y) ==
            is_nilpotent(multiply(e1, y)));
    }
  }
  // representatives must carry the required one-line ascents
  CHECK_THROWS_WITH_AS(is_nilpotent_class_dcm(3, {1, 2}, from_text("213")),
                       "not a valid representative", std::invalid_argument);
  CHECK_THROWS_WITH_AS(is_nilpotent_class_dcm(3, {}, from_text("210")),
                       "not a valid representative", std::invalid_argument);
}

TEST_CASE("maxima of the nilpotent part: linear elements with complementary "
          "support, unique exactly when that support commutes") {
  const int n = 4;
  SimpleSet S = full_S(n);
  std::vector<SimpleSet> all_K = {{}, {1}, {2}, {3}, {1, 2},
                                  {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto& K : all_K) {
    SimpleSet comp;
    for (int i : S)
      if (!K.count(i)) comp.insert(i);
    const auto nm = nil_maximal_dcm(n, K);
    std::set<PP> got(nm.maxima.begin(), nm.maxima.end());
    std::set<PP> want;
    for (const auto& w : sorted_d_star(n, K))
      if (is_linear_with_support(w, comp)) want.insert(w);
    CHECK(got == want);
    bool commuting = true;
    for (int a : comp)
      for (int b : comp)
        if (a != b && std::abs(a - b) < 2) commuting = false;
    CHECK(nm.unique == commuting);
  }
  // spot checks
  const auto nm13 = nil_maximal_dcm(4, {2});
  REQUIRE(nm13.unique);
  CHECK(nm13.maxima[0] == multiply(simple_s(4, 1), simple_s(4, 3)));
  const auto nm1 = nil_maximal_dcm(4, {2, 3});
  REQUIRE(nm1.unique);
  CHECK(nm1.maxima[0] == simple_s(4, 1));
}

TEST_CASE("coxeter elements counted two ways; component dimensions") {
  for (int n : {3, 4}) {
    auto cox = coxeter_elements(n);
    CHECK(static_cast<int>(cox.size()) == (1 << (n - 2)));
    // products of all generators, each exactly once, in every order
    std::vector<int> order;
    for (int i = 1; i < n; ++i) order.push_back(i);
    std::set<PP> products;
    do {
      PP acc = identity_pp(n);
      for (int i : order) acc = multiply(acc, simple_s(n, i));
      products.insert(acc);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(products == std::set<PP>(cox.begin(), cox.end()));
  }
  const auto cd3 = components_and_dims(3);
  CHECK(cd3.dim_g0 == 8);
  CHECK(cd3.dim_w0_stratum == 5);
  REQUIRE(cd3.components.size() == 2);
  for (const auto& [c, d] : cd3.components) {
    CHECK(d == 6);
    CHECK(coxeter_length(c) == 2);
  }
  const auto cd4 = components_and_dims(4);
  CHECK(cd4.dim_g0 == 15);
  CHECK(cd4.dim_w0_stratum == 9);
  REQUIRE(cd4.components.size() == 4);
  for (const auto& [c, d] : cd4.components) CHECK(d == 12);
  CHECK(std::is_sorted(cd4.components.begin(), cd4.components.end()));
}

TEST_CASE("cross-section poset: subsets under reverse inclusion form a "
          "distributive lattice with the full set at the bottom") {
  const auto P = csl_dcm(3);
  REQUIRE(P.size() == 8);
  CHECK(P.is_bounded());
  CHECK(P.is_graded());
  CHECK(P.lattice_check().lattice);
  CHECK(P.distributive_check().distributive);
  const auto mins = P.minimal_elements();
  REQUIRE(mins.size() == 1);
  CHECK(P.label(mins[0]) == "1,2,3");
  const auto maxs = P.maximal_elements();
  REQUIRE(maxs.size() == 1);
  CHECK(P.label(maxs[0]) == "none");

  // opposite of the inclusion order on the same carrier
  std::vector<SimpleSet> subs;
  for (const auto& lab : P.labels()) subs.push_back(subset_from_text(lab, 4));
  const auto B =
      FinitePoset::from_leq(P.labels(), [&](int a, int b) {
        return std::includes(subs[b].begin(), subs[b].end(), subs[a].begin(),
                             subs[a].end());
      });
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j) CHECK(P.leq(i, j) == B.leq(j, i));
}

TEST_CASE("conjugacy classes of the rook monoid: counts, labels, and the "
          "failure of antisymmetry") {
  const auto r2 = putcha_classes_Mn(2);
  REQUIRE(r2.classes.size() == 4);
  std::vector<std::string> labels2;
  for (const auto& c : r2.classes) labels2.push_back(c.label);
  CHECK(labels2 == std::vector<std::string>{"e0:12", "e1:12", "e1:21",
                                            "e2:12"});
  CHECK(r2.classes[1].rep == from_text("10"));
  CHECK(r2.classes[2].rep == from_text("20"));
  int nil2 = 0;
  for (const auto& c : r2.classes) nil2 += c.nilpotent ? 1 : 0;
  CHECK(nil2 == 2);

  const auto r3 = putcha_classes_Mn(3);
  CHECK(r3.classes.size() == 7);
  int nil3 = 0;
  for (const auto& c : r3.classes) nil3 += c.nilpotent ? 1 : 0;
  CHECK(nil3 == 3);

  const auto r4 = putcha_classes_Mn(4);
  CHECK(r4.classes.size() == 12);
  int nil4 = 0;
  for (const auto& c : r4.classes) nil4 += c.nilpotent ? 1 : 0;
  CHECK(nil4 == 5);

  // classes partition the canonical transversal
  for (int n : {2, 3}) {
    const auto res = putcha_classes_Mn(n);
    std::set<PP> covered;
    std::size_t total = 0;
    for (const auto& c : res.classes) {
      total += c.orbit_gj.size();
      covered.insert(c.orbit_gj.begin(), c.orbit_gj.end());
    }
    const auto gj = gauss_jordan(n);
    CHECK(total == gj.size());
    CHECK(covered == std::set<PP>(gj.begin(), gj.end()));
  }

  // the class relation: reflexive, transitive, but NOT antisymmetric
  struct CaseData {
    int n;
    int two_cycles;
  };
  for (const auto& cs : {CaseData{2, 1}, CaseData{3, 4}, CaseData{4, 13}}) {
    const auto res = putcha_classes_Mn(cs.n);
    const int m = static_cast<int>(res.classes.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        leq[i][j] =
            putcha_class_leq_Mn(cs.n, res.classes[i].rep, res.classes[j].rep);
    for (int i = 0; i < m; ++i) CHECK(leq[i][i]);
    bool transitive = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
    CHECK(transitive);
    int two_cycles = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (leq[i][j] && leq[j][i]) ++two_cycles;
    CHECK(two_cycles == cs.two_cycles);

    // zero and identity classes are strict extremes, untouched by any cycle
    int zi = -1, ii = -1;
    for (int i = 0; i < m; ++i) {
      if (res.classes[i].rep == zero_pp(cs.n)) zi = i;
      if (res.classes[i].rep == identity_pp(cs.n)) ii = i;
    }
    REQUIRE(zi >= 0);
    REQUIRE(ii >= 0);
    for (int i = 0; i < m; ++i) {
      CHECK(leq[zi][i]);
      CHECK(leq[i][ii]);
      if (i != zi) CHECK_FALSE(leq[i][zi]);
      if (i != ii) CHECK_FALSE(leq[ii][i]);
    }
  }

  // building the poset surfaces the antisymmetry failure as an error
  CHECK_THROWS_AS(putcha_poset_Mn(2), PosetError);
  try {
    putcha_poset_Mn(2);
  } catch (const PosetError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("antisymmetry violated") != std::string::npos);
    CHECK(msg.find("e1:12") != std::string::npos);
    CHECK(msg.find("e1:21") != std::string::npos);
  }
}

TEST_CASE("nilpotency on the canonical transversal: power iteration matches "
          "the decomposition criterion") {
  for (int n : {2, 3, 4}) {
    for (const auto& g : gauss_jordan(n)) {
      const auto dec = gj_decompose(g);
      const bool criterion = dec.r == 0 || support(dec.y).count(1) > 0;
      CHECK(is_nilpotent(g) == criterion);
    }
  }
}

TEST_CASE("rook-to-interval correspondence: frozen small tables, bijectivity "
          "onto the transversal, order reversal") {
  // frozen table for two points, even degree
  const auto tab2 = rook_interval_map(2, true);
  CHECK(tab2.n == 4);
  CHECK(tab2.I == SimpleSet{1});
  std::map<std::string, std::string> got;
  for (const auto& [s, w] : tab2.table) got[to_text(s)] = to_text(w);
  const std::map<std::string, std::string> want = {
      {"00", "3412"}, {"01", "1432"}, {"02", "1342"}, {"10", "1423"},
      {"12", "1243"}, {"20", "1324"}, {"21", "1234"}};
  CHECK(got == want);

  // odd companion hits exactly the frozen seven-element diagram's nodes
  const auto tab2o = rook_interval_map(2, false);
  CHECK(tab2o.n == 5);
  CHECK(tab2o.I == SimpleSet{1, 2});
  std::set<std::string> image_o;
  for (const auto& [s, w] : tab2o.table) image_o.insert(to_text(w));
  CHECK(image_o == std::set<std::string>{"14523", "12543", "12453", "12534",
                                         "12354", "12435", "12345"});

  for (int m : {1, 2}) {
    for (bool even : {true, false}) {
      const auto tab = rook_interval_map(m, even);
      // injective, and the image is exactly the transversal d_star(n, I)
      std::set<PP> image;
      for (const auto& [s, w] : tab.table) image.insert(w);
      CHECK(image.size() == tab.table.size());
      const auto ds = d_star(tab.n, tab.I);
      CHECK(image == std::set<PP>(ds.begin(), ds.end()));
      // order reversal: s <= t on rooks iff image(t) <= image(s)
      for (const auto& [s, ws] : tab.table)
        for (const auto& [t, wt] : tab.table)
          CHECK(bcr_leq(s, t) == bcr_leq(wt, ws));
    }
  }

  // parameter validation
  CHECK_THROWS_WITH_AS(rook_interval_map(0, true), "parameters inconsistent",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(rook_interval_image(2, true, from_text("102")),
                       "parameters inconsistent", std::invalid_argument);
  CHECK_THROWS_WITH_AS(rook_interval_readback(2, true, from_text("123")),
                       "parameters inconsistent", std::invalid_argument);
}
