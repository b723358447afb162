#include <algorithm>
#include <cmath>
#include <set>

#include "renner/posetkit.hpp"

namespace renner {

std::vector<std::vector<int>> interval_chains(const FinitePoset& P, int x,
                                              int y) {
  std::vector<std::vector<int>> out;
  if (!P.leq(x, y)) return out;
  std::vector<int> path;
  const auto& up_adj = P.upper_covers();
  std::function<void(int)> dfs = [&](int v) {
    if (v == y) {
      out.push_back(path);
      return;
    }
    for (auto [w, k] : up_adj[v]) {
      if (!P.leq(w, y)) continue;
      path.push_back(k);
      dfs(w);
      path.pop_back();
    }
  };
  dfs(x);
  return out;
}

namespace {

bool weakly_increasing(const std::vector<double>& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] < seq[i - 1]) return false;
  return true;
}

std::vector<double> chain_labels(const std::vector<int>& chain,
                                 const std::vector<double>& labels) {
  std::vector<double> seq;
  seq.reserve(chain.size());
  for (int k : chain) seq.push_back(labels[k]);
  return seq;
}

// Check one fully labeled interval; empty string when fine.
std::string check_interval(const FinitePoset& P, int x, int y,
                           const std::vector<double>& labels) {
  const auto chains = interval_chains(P, x, y);
  int increasing = -1;
  int count = 0;
  std::vector<double> lexmin;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    auto seq = chain_labels(chains[c], labels);
    if (weakly_increasing(seq)) {
      ++count;
      increasing = static_cast<int>(c);
    }
    if (c == 0 || seq < lexmin) lexmin = std::move(seq);
  }
  const std::string iv = "interval (" + P.label(x) + ", " + P.label(y) + ")";
  if (count != 1)
    return iv + " has " + std::to_string(count) +
           " weakly increasing maximal chains";
  if (chain_labels(chains[increasing], labels) != lexmin)
    return iv + ": the weakly increasing chain is not lexicographically first";
  return "";
}

}  // namespace

ElCheckResult el_check(const FinitePoset& P,
                       const std::vector<double>& labels) {
  if (!P.is_bounded())
    throw PosetError("el check requires a bounded poset");
  ElCheckResult res;
  for (int x = 0; x < P.size(); ++x) {
    std::string bad;
    P.up(x).for_each([&](int y) {
      if (!bad.empty() || y == x) return;
      bad = check_interval(P, x, y, labels);
    });
    if (!bad.empty()) {
      res.ok = false;
      res.witness = bad;
      return res;
    }
  }
  return res;
}

std::optional<std::pair<int, int>> el_forced_refutation(const FinitePoset& P,
                                                        int max_rank_diff) {
  const int m = static_cast<int>(P.covers().size());
  const auto& rank = P.ranks();

  // Pass 1: in an interval with a unique maximal chain, that chain must be
  // the weakly increasing one, forcing label(c1) <= label(c2) along it.
  std::vector<std::vector<int>> forced(m);
  std::vector<std::pair<int, std::vector<std::vector<int>>>> window_chains;
  for (int x = 0; x < P.size(); ++x) {
    P.up(x).for_each([&](int y) {
      if (y == x) return;
      const int diff = rank[y] - rank[x];
      if (diff < 2 || diff > max_rank_diff) return;
      auto chains = interval_chains(P, x, y);
      if (chains.size() == 1)
        for (std::size_t t = 1; t < chains[0].size(); ++t)
          forced[chains[0][t - 1]].push_back(chains[0][t]);
    });
  }

  // Transitive closure of the forced constraints (cycles simply mean the
  // labels are forced equal; reachability still expresses "<=").
  std::vector<DynBitset> reach(m, DynBitset(m));
  {
    std::vector<int> stack;
    for (int s = 0; s < m; ++s) {
      stack.assign(1, s);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : forced[v])
          if (!reach[s].test(w)) {
            reach[s].set(w);
            stack.push_back(w);
          }
      }
    }
  }

  // Pass 2: two distinct maximal chains of one interval, both forced weakly
  // increasing, contradict uniqueness in every labeling.
  std::optional<std::pair<int, int>> witness;
  for (int x = 0; x < P.size() && !witness; ++x) {
    P.up(x).for_each([&](int y) {
      if (witness || y == x) return;
      const int diff = rank[y] - rank[x];
      if (diff < 2 || diff > max_rank_diff) return;
      const auto chains = interval_chains(P, x, y);
      if (chains.size() < 2) return;
      int forced_count = 0;
      for (const auto& ch : chains) {
        bool all_forced = true;
        for (std::size_t t = 1; t < ch.size() && all_forced; ++t)
          if (!reach[ch[t - 1]].test(ch[t])) all_forced = false;
        if (all_forced && ++forced_count >= 2) {
          witness = std::make_pair(x, y);
          return;
        }
      }
    });
  }
  return witness;
}

ElSearchResult el_search_exhaustive(const FinitePoset& P, int label_bound,
                                    long long budget) {
  ElSearchResult res;
  const int m = static_cast<int>(P.covers().size());
  if (m > 31) {  // cover-set masks are 32-bit
    res.status = ElSearchResult::Status::BudgetExceeded;
    res.method = "search space too large";
    return res;
  }

  // Precompute every nontrivial interval's chains and the set of covers it
  // uses, so partial assignments can be checked as soon as they complete an
  // interval.
  struct Interval {
    int x, y;
    std::uint32_t cover_mask;
    std::vector<std::vector<int>> chains;
  };
  std::vector<Interval> intervals;
  for (int x = 0; x < P.size(); ++x)
    P.up(x).for_each([&](int y) {
      if (y == x) return;
      Interval iv{x, y, 0, interval_chains(P, x, y)};
      for (const auto& ch : iv.chains)
        for (int k : ch) iv.cover_mask |= (1u << k);
      intervals.push_back(std::move(iv));
    });

  std::vector<double> labels(m, 0.0);
  long long nodes = 0;
  bool budget_hit = false;

  auto interval_ok = [&](const Interval& iv) {
    int increasing = -1, count = 0;
    std::vector<double> lexmin;
    for (std::size_t c = 0; c < iv.chains.size(); ++c) {
      auto seq = chain_labels(iv.chains[c], labels);
      if (weakly_increasing(seq)) {
        ++count;
        if (count > 1) return false;
        increasing = static_cast<int>(c);
      }
      if (c == 0 || seq < lexmin) lexmin = std::move(seq);
    }
    return count == 1 && chain_labels(iv.chains[increasing], labels) == lexmin;
  };

  std::function<bool(int)> assign = [&](int t) -> bool {
    if (t == m) return true;
    // Candidate values: the distinct values already used, one below the
    // minimum, midpoints between consecutive used values, one above the
    // maximum — every order pattern over the next cover is represented.
    std::vector<double> used(labels.begin(), labels.begin() + t);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<double> cands;
    if (used.empty()) {
      cands.push_back(0.0);
    } else {
      const bool can_add = static_cast<int>(used.size()) < label_bound;
      if (can_add) cands.push_back(used.front() - 1.0);
      for (std::size_t i = 0; i < used.size(); ++i) {
        cands.push_back(used[i]);
        if (can_add && i + 1 < used.size())
          cands.push_back((used[i] + used[i + 1]) / 2.0);
      }
      if (can_add) cands.push_back(used.back() + 1.0);
    }
    const std::uint32_t assigned = (t + 1 >= 32) ? 0xffffffffu
                                                 : ((1u << (t + 1)) - 1);
    for (double v : cands) {
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      labels[t] = v;
      bool ok = true;
      for (const auto& iv : intervals) {
        if ((iv.cover_mask & (1u << t)) == 0) continue;
        if ((iv.cover_mask & ~assigned) != 0) continue;  // not complete yet
        if (!interval_ok(iv)) {
          ok = false;
          break;
        }
      }
      if (ok && assign(t + 1)) return true;
      if (budget_hit) return false;
    }
    return false;
  };

  const bool found = assign(0);
  res.nodes_used = nodes;
  if (budget_hit) {
    res.status = ElSearchResult::Status::BudgetExceeded;
    res.method = "exhaustive search";
    return res;
  }
  if (!found) {
    res.status = ElSearchResult::Status::None;
    res.method = "exhaustive search";
    res.witness = "no labeling over any order pattern";
    return res;
  }
  // Normalize to integer order pattern and re-verify.
  std::vector<double> used = labels;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> ints(m);
  std::vector<double> as_double(m);
  for (int k = 0; k < m; ++k) {
    ints[k] = static_cast<int>(std::lower_bound(used.begin(), used.end(),
                                                labels[k]) -
                               used.begin()) +
              1;
    as_double[k] = ints[k];
  }
  const auto verify = el_check(P, as_double);
  if (!verify.ok)
    throw PosetError("exhaustive labeling failed verification: " +
                     verify.witness);
  res.status = ElSearchResult::Status::Found;
  res.labels = std::move(ints);
  res.method = "exhaustive search";
  return res;
}

ElSearchResult el_search(const FinitePoset& P, long long budget) {
  if (!P.is_bounded())
    throw PosetError("el search requires a bounded poset");
  ElSearchResult res;
  const int m = static_cast<int>(P.covers().size());
  if (P.size() <= 1 || m == 0) {
    res.status = ElSearchResult::Status::Found;
    res.method = "trivial";
    return res;
  }

  // A distributive lattice carries the labeling by join-irreducibles: label
  // a cover (a, b) by the position (in rank order) of the unique
  // join-irreducible below b but not below a.
  if (P.size() <= 400) {
    const auto lat = P.lattice_check();
    if (lat.lattice && P.distributive_check().distributive) {
      std::vector<int> ji;
      for (int i = 0; i < P.size(); ++i)
        if (P.lower_covers()[i].size() == 1) ji.push_back(i);
      std::sort(ji.begin(), ji.end(), [&](int a, int b) {
        return P.ranks()[a] != P.ranks()[b] ? P.ranks()[a] < P.ranks()[b]
                                            : a < b;
      });
      std::vector<double> labels(m, 0.0);
      bool well_defined = true;
      for (int k = 0; k < m && well_defined; ++k) {
        const auto [a, b] = P.covers()[k];
        int found = -1, count = 0;
        for (std::size_t t = 0; t < ji.size(); ++t)
          if (P.leq(ji[t], b) && !P.leq(ji[t], a)) {
            ++count;
            found = static_cast<int>(t);
          }
        if (count != 1)
          well_defined = false;
        else
          labels[k] = found + 1;
      }
      if (well_defined && el_check(P, labels).ok) {
        res.status = ElSearchResult::Status::Found;
        res.method = "join-irreducible labeling";
        res.labels.resize(m);
        for (int k = 0; k < m; ++k) res.labels[k] = static_cast<int>(labels[k]);
        return res;
      }
    }
  }

  if (const auto w = el_forced_refutation(P)) {
    res.status = ElSearchResult::Status::None;
    res.method = "forced-chain refutation";
    res.witness = "interval (" + P.label(w->first) + ", " + P.label(w->second) +
                  ") has two maximal chains forced weakly increasing";
    return res;
  }

  if (m <= 14) return el_search_exhaustive(P, m, budget);

  res.status = ElSearchResult::Status::BudgetExceeded;
  res.method = "search space too large";
  return res;
}

}  // namespace renner
