#pragma once
// Permutations and injective partial transformations of {1..n} in one-line
// notation (entry 0 = undefined), with the product convention fixed so that
// multiplying on the LEFT by the adjacent transposition s_i exchanges the
// entries at positions i, i+1, and multiplying on the RIGHT by s_j exchanges
// the letters j, j+1 wherever they occur.  Equivalently (u*v)(k) = v(u(k)),
// with undefined propagating for partial maps.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace renner {

// One-line notation: element x maps k (1-based) to x[k-1]; x[k-1] == 0 means
// "undefined at k".  A permutation is the full-rank case.  The degree n is
// the vector's size.
using PP = std::vector<int>;

// Subset of the simple reflections {s_1, ..., s_{n-1}}, stored as the indices.
using SimpleSet = std::set<int>;

struct DegreeMismatchError : std::invalid_argument {
  DegreeMismatchError() : std::invalid_argument("degree mismatch") {}
};

struct EnumerationLimitError : std::runtime_error {
  explicit EnumerationLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Hash functor so PP can key unordered containers.
struct PPHash {
  std::size_t operator()(const PP& x) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int v : x) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline int degree(const PP& x) { return static_cast<int>(x.size()); }

bool is_partial_perm(const PP& x);  // nonzero entries pairwise distinct, in 1..n
bool is_permutation(const PP& x);   // full rank partial perm

// (u*v)(k) = v(u(k)); 0 propagates.  Throws DegreeMismatchError.
PP multiply(const PP& u, const PP& v);
PP inverse(const PP& u);

PP identity_pp(int n);
PP zero_pp(int n);
PP simple_s(int n, int i);  // s_i, 1 <= i <= n-1
PP idem_e(int n, int r);    // e_r: k -> k for k <= r, undefined above

int rank_of(const PP& x);
bool is_unit(const PP& x);

// Inversion count == length of any reduced word.  Pre: permutation.
int coxeter_length(const PP& w);

struct AscDes {
  SimpleSet asc_L, asc_R, des_L, des_R;
};
// Asc_R(w) = {i : l(w s_i) > l(w)}, Asc_L(w) = Asc_R(w^{-1}); descents are
// the complements within {1..n-1}.
AscDes ascent_descent_sets(const PP& w);

// {s_i : w does not map {1..i} onto {1..i}} == letters of any reduced word.
SimpleSet support(const PP& w);

enum class LinClass { NotLinear, Linear, Coxeter };
// linear: w is a product of pairwise-distinct simple reflections,
// i.e. l(w) == |support(w)|; coxeter: additionally support(w) == S.
LinClass classify_linear_coxeter(const PP& w);
std::vector<PP> coxeter_elements(int n);

// Lexicographically least reduced word [i1, i2, ...] with
// w = s_{i1} * s_{i2} * ... under this library's product.
std::vector<int> reduced_word(PP w);

// 0-Hecke product: fold a reduced word of u onto v with the rule
// "multiply by s on the left only if that increases length".
PP demazure_product(const PP& u, const PP& v);

// Enumeration, deterministic order.  Caps keep memory bounded; exceeding a
// cap raises EnumerationLimitError("enumeration limit").
inline constexpr int kMaxEnumerateSn = 8;
inline constexpr int kMaxEnumerateRn = 6;
std::vector<PP> enumerate_sn(int n);
std::vector<PP> enumerate_rn(int n);
long long rn_size(int n);  // sum_k C(n,k)^2 k!

// sigma^n == zero map (n iterations suffice on n points).
bool is_nilpotent(const PP& sigma);

// w * sigma * w^{-1}: relabels the points of sigma by w; preserves rank and
// nilpotency.  Pre: w a permutation of the same degree.
PP conjugate(const PP& w, const PP& sigma);

// Text codec: digit strings for n <= 9 ("02501"), comma-separated for larger
// degrees ("10,2,0,4").
std::string to_text(const PP& x);
PP from_text(const std::string& text);

SimpleSet full_S(int n);  // {1..n-1}
std::string subset_to_text(const SimpleSet& I);              // "1,2" or "none"
SimpleSet subset_from_text(const std::string& text, int n);  // validates range

}  // namespace renner
