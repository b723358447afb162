#pragma once
// Finite posets with verified construction, order-theoretic property checks
// (gradedness, Eulerian condition, lattice/distributivity), opposite/product
// constructions, isomorphism testing, serialization to JSON/DOT, and a
// lexicographic-shellability toolkit for edge labelings.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace renner {

// Raised when a claimed order relation fails verification (reflexivity,
// antisymmetry, transitivity, acyclicity) or a check's precondition is not
// met.  The message carries a concrete witness.
struct PosetError : std::runtime_error {
  explicit PosetError(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-size bitset sized at runtime.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  bool operator==(const DynBitset& o) const = default;

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  static int and_count(const DynBitset& a, const DynBitset& b) {
    int c = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      c += __builtin_popcountll(a.w_[k] & b.w_[k]);
    return c;
  }
  static int and_count3(const DynBitset& a, const DynBitset& b,
                        const DynBitset& c) {
    int r = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      r += __builtin_popcountll(a.w_[k] & b.w_[k] & c.w_[k]);
    return r;
  }
  // a & b, written into out (must be presized).
  static void and_into(const DynBitset& a, const DynBitset& b, DynBitset& out) {
    for (std::size_t k = 0; k < a.w_.size(); ++k) out.w_[k] = a.w_[k] & b.w_[k];
  }
  // First index set in *this but not in o; -1 if none.
  int find_first_not_in(const DynBitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      const std::uint64_t d = w_[k] & ~o.w_[k];
      if (d) return static_cast<int>(k * 64 + __builtin_ctzll(d));
    }
    return -1;
  }
  int find_first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  template <class F>
  void for_each(F f) const {  // ascending index order
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(static_cast<int>(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// A move performed on one side: ('L', i) or ('R', i).
using Move = std::pair<char, int>;

// The set of one-step moves realizing a single cover, in canonical order
// (all 'L' before all 'R', each side ascending in the generator index).
struct CoverAnnotation {
  std::vector<Move> moves;
  int degree() const { return static_cast<int>(moves.size()); }
};

class FinitePoset {
 public:
  // Builds from a comparison oracle on indices into `labels`, verifying that
  // it is reflexive, antisymmetric, and transitive; any violation raises
  // PosetError with a witness.
  static FinitePoset from_leq(std::vector<std::string> labels,
                              const std::function<bool(int, int)>& leq);
  // Builds the order generated by directed edges (lo, hi): verifies
  // acyclicity, takes the reflexive-transitive closure, and reduces the
  // edges to covers.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  bool leq(int i, int j) const { return up_[i].test(j); }
  const DynBitset& up(int i) const { return up_[i]; }
  const DynBitset& down(int i) const { return down_[i]; }
  // Covers sorted ascending by (lo, hi) index pair.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  // (neighbor, cover index) lists, ascending by neighbor.
  const std::vector<std::vector<std::pair<int, int>>>& upper_covers() const {
    return up_adj_;
  }
  const std::vector<std::vector<std::pair<int, int>>>& lower_covers() const {
    return down_adj_;
  }
  const std::vector<int>& topo_order() const { return topo_; }

  // Longest-chain-to-x rank; always defined.
  const std::vector<int>& ranks() const { return rank_; }
  // Graded: every cover raises the longest-chain rank by exactly one.
  bool is_graded() const { return graded_; }
  std::optional<std::vector<int>> graded_ranks() const {
    if (!graded_) return std::nullopt;
    return rank_;
  }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  bool is_bounded() const;  // unique minimum and unique maximum

  struct EulerianReport {
    bool eulerian = true;
    int x = -1, y = -1;  // witness interval when not Eulerian
    std::string text;
  };
  // Every closed interval [x,y] with x != y has equally many elements of
  // even and odd rank.  Precondition: graded (PosetError otherwise).
  EulerianReport eulerian_check() const;

  struct LatticeReport {
    bool lattice = true;
    int x = -1, y = -1;   // witness pair
    int a = -1, b = -1;   // two minimal upper (or maximal lower) bounds
    bool join_side = true;
    std::string text;
  };
  LatticeReport lattice_check() const;
  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;

  struct DistributiveReport {
    bool distributive = true;
    int x = -1, y = -1, z = -1;
    std::string text;
  };
  // Checks meet-over-join distributivity on all triples.  Precondition:
  // lattice (PosetError otherwise); refuses sizes above 1000.
  DistributiveReport distributive_check() const;

  FinitePoset opposite() const;
  // Componentwise order on pairs; element (i, j) gets index i*Q.size()+j and
  // label "P.label(i)|Q.label(j)".
  static FinitePoset product(const FinitePoset& P, const FinitePoset& Q);
  // Order isomorphism P -> Q as an index map, if one exists.  Deterministic.
  static std::optional<std::vector<int>> isomorphism(const FinitePoset& P,
                                                     const FinitePoset& Q);

 private:
  // Builds covers/adjacency/topo/ranks from up_/down_.  When the order was
  // generated by an explicit edge list, passing its adjacency computes the
  // covers by per-edge redundancy instead of the all-pairs interval scan.
  void finalize(const std::vector<std::vector<int>>* edge_out = nullptr);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<DynBitset> up_, down_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<std::pair<int, int>>> up_adj_, down_adj_;
  std::vector<int> topo_, rank_, down_count_;
  bool graded_ = false;
};

// --- serialization ---------------------------------------------------------

struct PosetProperties {
  bool graded = false;
  bool lattice = false;
  std::optional<bool> distributive;  // null when not computed
  std::optional<bool> eulerian;      // null when not computed
};

// Schema: {"name": ..., "elements": [{"id", "label", "rank"}...],
//          "covers": [[lo, hi]...], "properties": {...}} plus, when
// annotations are given, "covers_annotated": [[lo, hi, degree, "L1", ...]].
nlohmann::ordered_json poset_to_json(
    const FinitePoset& P, const std::string& name, const PosetProperties& props,
    const std::vector<CoverAnnotation>* annotations = nullptr);

// Graphviz digraph, bottom-to-top rank direction, one edge per cover
// (lo -> hi); degree-2 covers drawn with penwidth=2 when annotations given.
std::string poset_to_dot(const FinitePoset& P, const std::string& name,
                         const std::vector<CoverAnnotation>* annotations =
                             nullptr);

// --- lexicographic shellability of cover labelings --------------------------

inline constexpr long long kDefaultElBudget = 1'000'000;

// All maximal chains of the closed interval [x, y], each as the sequence of
// cover indices traversed bottom-to-top.
std::vector<std::vector<int>> interval_chains(const FinitePoset& P, int x,
                                              int y);

struct ElCheckResult {
  bool ok = true;
  std::string witness;
};
// Verifies that under `labels` (one value per cover, indexed like covers())
// every nontrivial interval has exactly one weakly increasing maximal chain
// and that chain is lexicographically first.  Precondition: bounded poset
// (PosetError otherwise).
ElCheckResult el_check(const FinitePoset& P, const std::vector<double>& labels);

// Label-free refutation: inside every interval of rank difference at most
// `max_rank_diff` that has a unique maximal chain, consecutive cover labels
// are forced weakly increasing in any valid labeling; if the transitive
// closure of those constraints forces two distinct maximal chains of some
// interval to both be weakly increasing, no valid labeling exists.  Returns
// the witness interval, or nullopt if no refutation was found.
std::optional<std::pair<int, int>> el_forced_refutation(const FinitePoset& P,
                                                        int max_rank_diff = 4);

struct ElSearchResult {
  enum class Status { Found, None, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::vector<int> labels;  // integer labeling per cover when found
  std::string method;       // how the outcome was established
  std::string witness;      // refutation witness when status == None
  long long nodes_used = 0;
};

// Exhaustive backtracking over order patterns of cover labels, with at most
// `label_bound` distinct values; `budget` caps search nodes.
ElSearchResult el_search_exhaustive(const FinitePoset& P, int label_bound,
                                    long long budget);

// Orchestrated search: join-irreducible labeling when the poset is a
// distributive lattice, else forced refutation, else exhaustive search for
// small cover sets; anything larger reports BudgetExceeded.
ElSearchResult el_search(const FinitePoset& P,
                         long long budget = kDefaultElBudget);

}  // namespace renner
