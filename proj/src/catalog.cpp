#include "renner/catalog.hpp"

#include <stdexcept>
#include <utility>

#include "renner/bruhat.hpp"
#include "renner/cosets.hpp"
#include "renner/putcha.hpp"
#include "renner/weakorder.hpp"

namespace renner {
namespace {

std::string subset_name(const SimpleSet& I) {
  return "{" + (I.empty() ? std::string() : subset_to_text(I)) + "}";
}

}  // namespace

std::vector<std::string> poset_kinds() {
  return {"bruhat",     "renner",      "double-coset",
          "putcha-dcm", "putcha-mn",   "weak-w",
          "weak-wew-dcm", "weak-wew-mn", "csl-dcm"};
}

int degree_cap(const std::string& kind) {
  if (kind == "bruhat") return 6;
  if (kind == "renner") return 5;
  if (kind == "double-coset") return 6;
  if (kind == "putcha-dcm") return 6;
  if (kind == "putcha-mn") return 4;
  if (kind == "weak-w") return 7;
  if (kind == "weak-wew-dcm") return 5;
  if (kind == "weak-wew-mn") return 4;
  if (kind == "csl-dcm") return 8;
  throw std::invalid_argument("unknown poset kind: " + kind);
}

BuiltPoset build_poset_catalog(const std::string& kind, int n,
                               const std::optional<SimpleSet>& I,
                               const std::optional<SimpleSet>& J,
                               const std::optional<int>& i) {
  const int cap = degree_cap(kind);
  if (n < 2 || n > cap)
    throw std::invalid_argument("--n for kind " + kind + " must be in 2.." +
                                std::to_string(cap));
  const std::string base = kind + " n=" + std::to_string(n);
  const SimpleSet Iv = I.value_or(SimpleSet{});
  const SimpleSet Jv = J.value_or(SimpleSet{});

  if (kind == "bruhat") {
    const std::vector<PP> Sn = enumerate_sn(n);
    std::vector<std::string> labels;
    labels.reserve(Sn.size());
    for (const PP& w : Sn) labels.push_back(to_text(w));
    FinitePoset P = FinitePoset::from_leq(
        labels, [&](int a, int b) { return bcr_leq(Sn[a], Sn[b]); });
    return {std::move(P), {}, base};
  }
  if (kind == "renner") return {renner_poset(n), {}, base};
  if (kind == "double-coset")
    return {double_coset_poset(n, Iv, Jv),
            {},
            base + " I=" + subset_name(Iv) + " J=" + subset_name(Jv)};
  if (kind == "putcha-dcm")
    return {putcha_poset_dcm(n, Iv), {}, base + " I=" + subset_name(Iv)};
  if (kind == "putcha-mn") return {putcha_poset_Mn(n), {}, base};
  if (kind == "weak-w") {
    AnnotatedPoset A = weak_poset_W(n);
    return {std::move(A.poset), std::move(A.annotations), base};
  }
  if (kind == "weak-wew-dcm") {
    AnnotatedPoset A = wew_pair_dcm(n, Iv);
    return {std::move(A.poset), std::move(A.annotations),
            base + " I=" + subset_name(Iv)};
  }
  if (kind == "weak-wew-mn") {
    if (!i.has_value())
      throw std::invalid_argument(
          "kind weak-wew-mn requires --i (the fixed rank)");
    if (*i < 0 || *i > n)
      throw std::invalid_argument("--i must be in 0..n");
    AnnotatedPoset A = wew_weak_Mn(n, *i);
    return {std::move(A.poset), std::move(A.annotations),
            base + " i=" + std::to_string(*i)};
  }
  if (kind == "csl-dcm") return {csl_dcm(n - 1), {}, base};
  throw std::invalid_argument("unknown poset kind: " + kind);
}

nlohmann::ordered_json built_poset_json(const BuiltPoset& bp) {
  PosetProperties props;
  props.graded = bp.poset.is_graded();
  props.lattice = bp.poset.lattice_check().lattice;
  if (props.lattice && bp.poset.size() <= 1000)
    props.distributive = bp.poset.distributive_check().distributive;
  if (props.graded) props.eulerian = bp.poset.eulerian_check().eulerian;
  const std::vector<CoverAnnotation>* ann =
      bp.annotations.empty() ? nullptr : &bp.annotations;
  return poset_to_json(bp.poset, bp.name, props, ann);
}

std::string built_poset_dot(const BuiltPoset& bp) {
  const std::vector<CoverAnnotation>* ann =
      bp.annotations.empty() ? nullptr : &bp.annotations;
  return poset_to_dot(bp.poset, bp.name, ann);
}

}  // namespace renner
