#pragma once
// Named catalog of the library's posets for external interfaces (CLI,
// bindings): one builder keyed by kind, plus serialization that computes
// the affordable order properties.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"

namespace renner {

// Kinds: bruhat, renner, double-coset, putcha-dcm, putcha-mn, weak-w,
// weak-wew-dcm, weak-wew-mn, csl-dcm.
std::vector<std::string> poset_kinds();

// Inclusive degree cap per kind; keeps every construction at desk scale.
// Throws std::invalid_argument("unknown poset kind: ...").
int degree_cap(const std::string& kind);

struct BuiltPoset {
  FinitePoset poset;
  std::vector<CoverAnnotation> annotations;  // empty when unannotated
  std::string name;  // e.g. "weak-wew-dcm n=4 I={1,2}"
};

// Builds the poset named by `kind`.  Throws std::invalid_argument for an
// unknown kind, an out-of-range degree, or missing/invalid parameters, and
// lets PosetError propagate when a requested relation fails the order
// axioms (a reportable finding, not a usage error).
BuiltPoset build_poset_catalog(const std::string& kind, int n,
                               const std::optional<SimpleSet>& I,
                               const std::optional<SimpleSet>& J,
                               const std::optional<int>& i);

// JSON document with the poset's elements, covers, annotations (when
// present), and the properties that are affordable at its size: graded and
// lattice always; distributivity for lattices of at most 1000 elements;
// the Eulerian condition for graded orders.
nlohmann::ordered_json built_poset_json(const BuiltPoset& bp);

// Graphviz text for the same poset.
std::string built_poset_dot(const BuiltPoset& bp);

}  // namespace renner
