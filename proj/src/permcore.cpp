#include "renner/permcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace renner {

bool is_partial_perm(const PP& x) {
  const int n = degree(x);
  std::vector<char> seen(n + 1, 0);
  for (int v : x) {
    if (v < 0 || v > n) return false;
    if (v != 0) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool is_permutation(const PP& x) {
  return is_partial_perm(x) && rank_of(x) == degree(x);
}

PP multiply(const PP& u, const PP& v) {
  if (u.size() != v.size()) throw DegreeMismatchError{};
  const int n = degree(u);
  PP out(n, 0);
  for (int k = 0; k < n; ++k) {
    const int mid = u[k];
    out[k] = (mid == 0) ? 0 : v[mid - 1];
  }
  return out;
}

PP inverse(const PP& u) {
  const int n = degree(u);
  PP out(n, 0);
  for (int k = 0; k < n; ++k) {
    if (u[k] != 0) out[u[k] - 1] = k + 1;
  }
  return out;
}

PP identity_pp(int n) {
  PP out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

PP zero_pp(int n) { return PP(n, 0); }

PP simple_s(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("index out of range");
  PP out = identity_pp(n);
  std::swap(out[i - 1], out[i]);
  return out;
}

PP idem_e(int n, int r) {
  if (r < 0 || r > n) throw std::out_of_range("index out of range");
  PP out(n, 0);
  std::iota(out.begin(), out.begin() + r, 1);
  return out;
}

int rank_of(const PP& x) {
  int r = 0;
  for (int v : x)
    if (v != 0) ++r;
  return r;
}

bool is_unit(const PP& x) { return rank_of(x) == degree(x); }

int coxeter_length(const PP& w) {
  const int n = degree(w);
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

AscDes ascent_descent_sets(const PP& w) {
  const int n = degree(w);
  AscDes out;
  const PP winv = inverse(w);
  for (int i = 1; i < n; ++i) {
    // Right ascent at i: letter i appears before letter i+1, i.e. the
    // positions (values of w^{-1}) increase.
    if (winv[i - 1] < winv[i])
      out.asc_R.insert(i);
    else
      out.des_R.insert(i);
    // Left ascent at i: one-line entries at positions i, i+1 increase.
    if (w[i - 1] < w[i])
      out.asc_L.insert(i);
    else
      out.des_L.insert(i);
  }
  return out;
}

SimpleSet support(const PP& w) {
  const int n = degree(w);
  SimpleSet out;
  // s_i is in the support iff w does not stabilize {1..i} setwise, i.e. some
  // entry among the first i exceeds i.
  int mx = 0;
  for (int i = 1; i < n; ++i) {
    mx = std::max(mx, w[i - 1]);
    if (mx > i) out.insert(i);
  }
  return out;
}

LinClass classify_linear_coxeter(const PP& w) {
  if (!is_permutation(w)) return LinClass::NotLinear;
  const SimpleSet supp = support(w);
  if (coxeter_length(w) != static_cast<int>(supp.size()))
    return LinClass::NotLinear;
  if (static_cast<int>(supp.size()) == degree(w) - 1) return LinClass::Coxeter;
  return LinClass::Linear;
}

std::vector<PP> coxeter_elements(int n) {
  std::vector<PP> out;
  for (const PP& w : enumerate_sn(n))
    if (classify_linear_coxeter(w) == LinClass::Coxeter) out.push_back(w);
  return out;
}

std::vector<int> reduced_word(PP w) {
  // Repeatedly strip the least left descent: if s_i * w is shorter, the word
  // starts with i.  This yields the lexicographically least reduced word.
  const int n = degree(w);
  std::vector<int> word;
  int len = coxeter_length(w);
  while (len > 0) {
    for (int i = 1; i < n; ++i) {
      PP sw = multiply(simple_s(n, i), w);
      if (coxeter_length(sw) < len) {
        word.push_back(i);
        w = std::move(sw);
        --len;
        break;
      }
    }
  }
  return word;
}

PP demazure_product(const PP& u, const PP& v) {
  if (u.size() != v.size()) throw DegreeMismatchError{};
  const int n = degree(u);
  std::vector<int> word = reduced_word(u);
  PP acc = v;
  int len = coxeter_length(acc);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    PP cand = multiply(simple_s(n, *it), acc);
    const int clen = coxeter_length(cand);
    if (clen > len) {
      acc = std::move(cand);
      len = clen;
    }
  }
  return acc;
}

std::vector<PP> enumerate_sn(int n) {
  if (n < 1 || n > kMaxEnumerateSn)
    throw EnumerationLimitError("enumeration limit");
  std::vector<PP> out;
  PP w = identity_pp(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long long rn_size(int n) {
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - k + 1) / k;
    return r;
  };
  long long total = 0;
  long long fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

std::vector<PP> enumerate_rn(int n) {
  if (n < 1 || n > kMaxEnumerateRn)
    throw EnumerationLimitError("enumeration limit");
  // Rank-major order; within a rank, domains in lexicographic order of the
  // position combination, then images in lexicographic permutation order.
  std::vector<PP> out;
  out.reserve(static_cast<std::size_t>(rn_size(n)));
  out.push_back(zero_pp(n));
  for (int r = 1; r <= n; ++r) {
    // All r-subsets of {0..n-1} as sorted index vectors, lexicographic.
    std::vector<int> dom(r);
    std::iota(dom.begin(), dom.end(), 0);
    while (true) {
      // All r-subsets of {1..n} as sorted value vectors, lexicographic, then
      // all permutations of each.
      std::vector<int> vals(r);
      std::iota(vals.begin(), vals.end(), 1);
      while (true) {
        std::vector<int> perm = vals;
        std::sort(perm.begin(), perm.end());
        do {
          PP x = zero_pp(n);
          for (int t = 0; t < r; ++t) x[dom[t]] = perm[t];
          out.push_back(std::move(x));
        } while (std::next_permutation(perm.begin(), perm.end()));
        // next value combination
        int i = r - 1;
        while (i >= 0 && vals[i] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++vals[i];
        for (int j = i + 1; j < r; ++j) vals[j] = vals[j - 1] + 1;
      }
      // next domain combination
      int i = r - 1;
      while (i >= 0 && dom[i] == n - 1 - (r - 1 - i)) --i;
      if (i < 0) break;
      ++dom[i];
      for (int j = i + 1; j < r; ++j) dom[j] = dom[j - 1] + 1;
    }
  }
  return out;
}

bool is_nilpotent(const PP& sigma) {
  const int n = degree(sigma);
  PP acc = sigma;
  for (int k = 1; k < n; ++k) acc = multiply(acc, sigma);
  return acc == zero_pp(n);
}

PP conjugate(const PP& w, const PP& sigma) {
  return multiply(multiply(w, sigma), inverse(w));
}

std::string to_text(const PP& x) {
  const int n = degree(x);
  std::ostringstream os;
  if (n <= 9) {
    for (int v : x) os << v;
  } else {
    for (int k = 0; k < n; ++k) {
      if (k) os << ',';
      os << x[k];
    }
  }
  return os.str();
}

PP from_text(const std::string& text) {
  PP out;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("bad element text");
      out.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad element text");
      out.push_back(c - '0');
    }
  }
  if (!is_partial_perm(out)) throw std::invalid_argument("bad element text");
  return out;
}

SimpleSet full_S(int n) {
  SimpleSet out;
  for (int i = 1; i < n; ++i) out.insert(i);
  return out;
}

std::string subset_to_text(const SimpleSet& I) {
  if (I.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (int i : I) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  return os.str();
}

SimpleSet subset_from_text(const std::string& text, int n) {
  SimpleSet out;
  if (text == "none" || text.empty()) return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int i = std::stoi(tok);
    if (i < 1 || i >= n) throw std::out_of_range("index out of range");
    out.insert(i);
  }
  return out;
}

}  // namespace renner
