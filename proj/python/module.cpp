// Python bindings: the core monoid operations, the poset catalog (as JSON
// or DOT text), and the named verification claims.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "renner/bruhat.hpp"
#include "renner/catalog.hpp"
#include "renner/cosets.hpp"
#include "renner/permcore.hpp"
#include "renner/verify.hpp"
#include "renner/weakorder.hpp"

namespace py = pybind11;

namespace {

renner::BuiltPoset build(const std::string& kind, int n,
                         const std::optional<std::set<int>>& I,
                         const std::optional<std::set<int>>& J,
                         const std::optional<int>& i) {
  std::optional<renner::SimpleSet> Iv, Jv;
  if (I) Iv = renner::SimpleSet(I->begin(), I->end());
  if (J) Jv = renner::SimpleSet(J->begin(), J->end());
  return renner::build_poset_catalog(kind, n, Iv, Jv, i);
}

const char* status_text(renner::VerifyReport::Status s) {
  switch (s) {
    case renner::VerifyReport::Status::Pass:
      return "PASS";
    case renner::VerifyReport::Status::Fail:
      return "FAIL";
    default:
      return "SKIP";
  }
}

py::dict report_dict(const renner::VerifyReport& rep) {
  py::dict d;
  d["claim"] = rep.claim;
  d["params"] = rep.params_text;
  d["status"] = status_text(rep.status);
  d["details"] = rep.details;
  d["witness"] = rep.witness;
  d["wall_ms"] = rep.wall_ms;
  return d;
}

renner::ClaimParams claim_params(const std::optional<int>& n,
                                 const std::optional<int>& m,
                                 const std::optional<int>& i,
                                 const std::optional<int>& max_n,
                                 const std::optional<std::set<int>>& I,
                                 const std::optional<std::string>& poset,
                                 const std::optional<long long>& budget,
                                 const std::optional<bool>& even) {
  renner::ClaimParams p;
  p.n = n;
  p.m = m;
  p.i = i;
  p.max_n = max_n;
  if (I) p.I = renner::SimpleSet(I->begin(), I->end());
  p.poset_kind = poset;
  p.budget = budget;
  p.even = even;
  return p;
}

}  // namespace

PYBIND11_MODULE(pyrenner, mod) {
  mod.doc() =
      "Finite order-theoretic constructions for the symmetric-group rook "
      "monoid: products, containment order, poset catalog, verification "
      "claims.  Elements are one-line lists of ints with 0 = undefined.";

  mod.def("multiply", &renner::multiply, py::arg("u"), py::arg("v"),
          "Product with (u*v)(k) = v(u(k)); zeros propagate.");
  mod.def("inverse", &renner::inverse, py::arg("u"));
  mod.def("coxeter_length", &renner::coxeter_length, py::arg("w"),
          "Inversion count of a permutation.");
  mod.def("rank_of", &renner::rank_of, py::arg("x"),
          "Number of defined points.");
  mod.def("is_nilpotent", &renner::is_nilpotent, py::arg("x"));
  mod.def("simple_s", &renner::simple_s, py::arg("n"), py::arg("i"),
          "The adjacent transposition s_i as a one-line list.");
  mod.def("idem_e", &renner::idem_e, py::arg("n"), py::arg("r"),
          "The rank-r idempotent: identity on 1..r, undefined above.");
  mod.def("enumerate_sn", &renner::enumerate_sn, py::arg("n"));
  mod.def("enumerate_rn", &renner::enumerate_rn, py::arg("n"));
  mod.def("bcr_leq", &renner::bcr_leq, py::arg("x"), py::arg("y"),
          "Containment order via prefix dominance.");
  mod.def("renner_length", &renner::renner_length, py::arg("x"),
          "Graded rank of x in the containment order.");
  mod.def(
      "count_weak_covers",
      [](int n) { return renner::count_weak_covers(n); }, py::arg("n"),
      "(total covers, covers realized from both sides) of the two-sided "
      "weak order on the units of degree n.");
  mod.def(
      "double_coset_summary",
      [](int n, const std::set<int>& I, const std::set<int>& J) {
        const renner::SimpleSet Iv(I.begin(), I.end());
        const renner::SimpleSet Jv(J.begin(), J.end());
        py::list out;
        for (const renner::DoubleCoset& dc :
             renner::double_cosets(n, Iv, Jv)) {
          py::dict d;
          d["min_rep"] = renner::to_text(dc.min_rep);
          d["max_rep"] = renner::to_text(dc.max_rep);
          d["size"] = dc.members.size();
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("I"), py::arg("J"),
      "One dict per double coset: minimal/maximal representative and size.");

  mod.def("poset_kinds", &renner::poset_kinds);
  mod.def(
      "poset_json",
      [](const std::string& kind, int n,
         const std::optional<std::set<int>>& I,
         const std::optional<std::set<int>>& J, const std::optional<int>& i) {
        return renner::built_poset_json(build(kind, n, I, J, i)).dump(2);
      },
      py::arg("kind"), py::arg("n"), py::arg("I") = std::nullopt,
      py::arg("J") = std::nullopt, py::arg("i") = std::nullopt,
      "Build a catalog poset and return its JSON document as text.");
  mod.def(
      "poset_dot",
      [](const std::string& kind, int n,
         const std::optional<std::set<int>>& I,
         const std::optional<std::set<int>>& J, const std::optional<int>& i) {
        return renner::built_poset_dot(build(kind, n, I, J, i));
      },
      py::arg("kind"), py::arg("n"), py::arg("I") = std::nullopt,
      py::arg("J") = std::nullopt, py::arg("i") = std::nullopt,
      "Build a catalog poset and return Graphviz text.");

  mod.def("run_claim",
          [](const std::string& claim, const std::optional<int>& n,
             const std::optional<int>& m, const std::optional<int>& i,
             const std::optional<int>& max_n,
             const std::optional<std::set<int>>& I,
             const std::optional<std::string>& poset,
             const std::optional<long long>& budget,
             const std::optional<bool>& even) {
            return report_dict(renner::run_claim(
                claim, claim_params(n, m, i, max_n, I, poset, budget, even)));
          },
          py::arg("claim"), py::arg("n") = std::nullopt,
          py::arg("m") = std::nullopt, py::arg("i") = std::nullopt,
          py::arg("max_n") = std::nullopt, py::arg("I") = std::nullopt,
          py::arg("poset") = std::nullopt, py::arg("budget") = std::nullopt,
          py::arg("even") = std::nullopt,
          "Run one named claim; returns a dict with status PASS/FAIL/SKIP.");
  mod.def("claim_names", &renner::claim_names);
}
