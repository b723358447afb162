#pragma once
// Named verifiable claims over the library's constructions.  Each claim
// checks a property exhaustively at the requested scale and reports pass,
// fail (with a concrete witness), or a skip when a search budget ran out.

#include <optional>
#include <string>
#include <vector>

#include "renner/permcore.hpp"

namespace renner {

struct ClaimParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> i;
  std::optional<int> max_n;
  std::optional<SimpleSet> I;
  std::optional<SimpleSet> J;
  std::optional<std::string> poset_kind;
  std::optional<long long> budget;
  std::optional<bool> even;  // parity of the ambient degree, where relevant
};

struct VerifyReport {
  enum class Status { Pass, Fail, SkippedBudget };
  std::string claim;
  std::string params_text;  // effective parameters after defaults
  Status status = Status::Pass;
  std::string details;
  std::string witness;  // populated when status == Fail
  long long wall_ms = 0;
};

// The fixed list of claim names, in canonical order.
std::vector<std::string> claim_names();

// Runs one claim.  Throws std::invalid_argument for an unknown claim name,
// an unknown poset kind, or parameters outside the supported ranges.
VerifyReport run_claim(const std::string& claim, const ClaimParams& params);

// Runs every claim with the same base parameters (each claim applies its own
// defaults for parameters left unset).
std::vector<VerifyReport> run_all(const ClaimParams& params);

}  // namespace renner
