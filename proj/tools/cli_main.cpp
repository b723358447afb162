// Command-line interface: builds the library's posets as JSON or DOT on
// stdout, and runs named verification claims with machine-readable exit
// codes.
//
// Exit codes: 0 success; 1 a verified failure (a failing claim with a
// witness, or a construction that reports a falsification finding on
// stderr); 2 usage errors, unknown claims/kinds, or out-of-range
// parameters; 3 a verification left undecided by its search budget.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "renner/catalog.hpp"
#include "renner/permcore.hpp"
#include "renner/posetkit.hpp"
#include "renner/verify.hpp"

namespace {

using renner::BuiltPoset;
using renner::ClaimParams;
using renner::SimpleSet;
using renner::VerifyReport;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SimpleSet parse_subset(const std::string& text, int n,
                       const std::string& flag) {
  try {
    return renner::subset_from_text(text, n);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected comma-separated indices in 1.." +
                     std::to_string(n - 1) + " or \"none\", got \"" + text +
                     "\"");
  }
}

void emit_poset(const BuiltPoset& bp, const std::string& format) {
  if (format == "dot")
    std::cout << renner::built_poset_dot(bp);
  else
    std::cout << renner::built_poset_json(bp).dump(2) << "\n";
}

const char* status_tag(VerifyReport::Status s) {
  switch (s) {
    case VerifyReport::Status::Pass:
      return "PASS";
    case VerifyReport::Status::Fail:
      return "FAIL";
    default:
      return "SKIP";
  }
}

void print_report(const VerifyReport& rep) {
  std::cout << "[" << status_tag(rep.status) << "] " << rep.claim << " ("
            << rep.params_text << ") — " << rep.details;
  if (!rep.witness.empty()) std::cout << " [witness: " << rep.witness << "]";
  std::cout << " (" << rep.wall_ms << " ms)\n";
}

int exit_code_for(const std::vector<VerifyReport>& reports) {
  bool any_fail = false, any_skip = false;
  for (const VerifyReport& r : reports) {
    any_fail |= r.status == VerifyReport::Status::Fail;
    any_skip |= r.status == VerifyReport::Status::SkippedBudget;
  }
  if (any_fail) return 1;
  if (any_skip) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rook-monoid orders: poset construction and exhaustive verification"};
  app.require_subcommand(1);

  // --- poset ---------------------------------------------------------------
  auto* sub_poset = app.add_subcommand(
      "poset", "build a poset and print it as JSON or DOT on stdout");
  std::string kind;
  sub_poset->add_option("kind", kind,
                        "one of: bruhat renner double-coset putcha-dcm "
                        "putcha-mn weak-w weak-wew-dcm weak-wew-mn csl-dcm")
      ->required();
  int p_n = 0;
  auto* p_n_opt = sub_poset->add_option("--n", p_n, "degree n");
  std::string p_I, p_J;
  auto* p_I_opt = sub_poset->add_option(
      "--I", p_I, "generator subset, comma-separated or \"none\"");
  auto* p_J_opt = sub_poset->add_option(
      "--J", p_J, "second generator subset, comma-separated or \"none\"");
  int p_i = -1;
  auto* p_i_opt =
      sub_poset->add_option("--i", p_i, "fixed rank (weak-wew-mn only)");
  std::string p_format = "json";
  sub_poset->add_option("--format", p_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  // --- verify / verify-all ---------------------------------------------------
  auto* sub_verify =
      app.add_subcommand("verify", "run one named claim; see --list");
  std::string claim;
  sub_verify->add_option("claim", claim, "claim name (see verify --list)");
  bool list_claims = false;
  sub_verify->add_flag("--list", list_claims, "list the claim names");
  auto* sub_all =
      app.add_subcommand("verify-all", "run every claim with defaults");

  int v_n = 0, v_m = 0, v_i = -1, v_max_n = 0;
  std::string v_I, v_J, v_parity, v_poset;
  long long v_budget = 0;
  std::vector<CLI::Option*> v_opts;
  for (CLI::App* sub : {sub_verify, sub_all}) {
    v_opts.push_back(sub->add_option("--n", v_n, "degree n"));
    v_opts.push_back(sub->add_option("--m", v_m, "rook degree m"));
    v_opts.push_back(sub->add_option("--i", v_i, "fixed rank"));
    v_opts.push_back(sub->add_option("--max-n", v_max_n, "sweep 2..max_n"));
    v_opts.push_back(sub->add_option("--I", v_I, "generator subset"));
    v_opts.push_back(sub->add_option("--J", v_J, "second generator subset"));
    v_opts.push_back(sub->add_option("--parity", v_parity, "even or odd")
                         ->check(CLI::IsMember({"even", "odd"})));
    v_opts.push_back(sub->add_option(
        "--poset", v_poset, "order target: weak-left, weak-lr, wew-dcm"));
    v_opts.push_back(
        sub->add_option("--budget", v_budget, "search-node budget"));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sub_poset->parsed()) {
      if (p_n_opt->count() == 0)
        throw UsageError("poset requires --n");
      renner::degree_cap(kind);  // fail on unknown kinds before parsing sets
      std::optional<SimpleSet> I, J;
      if (p_I_opt->count()) I = parse_subset(p_I, p_n, "--I");
      if (p_J_opt->count()) J = parse_subset(p_J, p_n, "--J");
      BuiltPoset bp;
      try {
        bp = renner::build_poset_catalog(
            kind, p_n, I, J,
            p_i_opt->count() ? std::optional<int>(p_i) : std::nullopt);
      } catch (const renner::PosetError& e) {
        // A construction refused by its own verification is a finding, not
        // a usage error; report it loudly and distinguishably.
        std::cerr << "FALSIFICATION finding: the requested order is not a "
                     "partial order: "
                  << e.what() << "\n";
        return 1;
      }
      emit_poset(bp, p_format);
      return 0;
    }

    // verify / verify-all
    ClaimParams params;
    auto take = [&](CLI::App* sub) {
      if (sub->count("--n")) params.n = v_n;
      if (sub->count("--m")) params.m = v_m;
      if (sub->count("--i")) params.i = v_i;
      if (sub->count("--max-n")) params.max_n = v_max_n;
      if (sub->count("--parity")) params.even = (v_parity == "even");
      if (sub->count("--poset")) params.poset_kind = v_poset;
      if (sub->count("--budget")) params.budget = v_budget;
      if (sub->count("--I") || sub->count("--J")) {
        if (!params.n)
          throw UsageError("--I/--J require --n (the validation bound)");
        if (sub->count("--I")) params.I = parse_subset(v_I, v_n, "--I");
        if (sub->count("--J")) params.J = parse_subset(v_J, v_n, "--J");
      }
    };
    if (!params.budget) {
      if (const char* env = std::getenv("RENNER_BUDGET")) {
        char* end = nullptr;
        const long long b = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || b <= 0)
          throw UsageError("RENNER_BUDGET must be a positive integer, got \"" +
                           std::string(env) + "\"");
        params.budget = b;
      }
    }

    if (sub_verify->parsed()) {
      take(sub_verify);
      if (list_claims) {
        for (const std::string& name : renner::claim_names())
          std::cout << name << "\n";
        return 0;
      }
      if (claim.empty())
        throw UsageError("verify requires a claim name (or --list)");
      const VerifyReport rep = renner::run_claim(claim, params);
      print_report(rep);
      return exit_code_for({rep});
    }

    take(sub_all);
    const std::vector<VerifyReport> reports = renner::run_all(params);
    for (const VerifyReport& rep : reports) print_report(rep);
    const int code = exit_code_for(reports);
    std::cout << "verify-all: " << reports.size() << " claims, exit " << code
              << "\n";
    return code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
