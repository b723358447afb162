#include "renner/posetkit.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace renner {

namespace {

std::string pair_text(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace

void FinitePoset::finalize(const std::vector<std::vector<int>>* edge_out) {
  // Covers = transitive reduction: (i, j) is a cover iff exactly i and j lie
  // in the closed interval [i, j].
  covers_.clear();
  if (edge_out) {
    // Every cover of an edge-generated order is an edge, and an edge (a, b)
    // is redundant exactly when some other successor edge (a, c) has c < b.
    for (int a = 0; a < n_; ++a) {
      for (int b : (*edge_out)[a]) {
        bool redundant = false;
        for (int c : (*edge_out)[a])
          if (c != b && up_[c].test(b)) {
            redundant = true;
            break;
          }
        if (!redundant) covers_.emplace_back(a, b);
      }
    }
  } else {
    for (int i = 0; i < n_; ++i) {
      up_[i].for_each([&](int j) {
        if (j != i && DynBitset::and_count(up_[i], down_[j]) == 2)
          covers_.emplace_back(i, j);
      });
    }
  }
  std::sort(covers_.begin(), covers_.end());

  up_adj_.assign(n_, {});
  down_adj_.assign(n_, {});
  for (int k = 0; k < static_cast<int>(covers_.size()); ++k) {
    const auto [lo, hi] = covers_[k];
    up_adj_[lo].emplace_back(hi, k);
    down_adj_[hi].emplace_back(lo, k);
  }

  down_count_.resize(n_);
  for (int i = 0; i < n_; ++i) down_count_[i] = down_[i].count();
  // Sorting by |down| is a linear extension: x < y forces |down(x)| < |down(y)|.
  topo_.resize(n_);
  for (int i = 0; i < n_; ++i) topo_[i] = i;
  std::stable_sort(topo_.begin(), topo_.end(), [&](int a, int b) {
    return down_count_[a] != down_count_[b] ? down_count_[a] < down_count_[b]
                                            : a < b;
  });

  // Longest chain ending at each element, via covers in topological order.
  rank_.assign(n_, 0);
  for (int t : topo_)
    for (auto [hi, k] : up_adj_[t])
      rank_[hi] = std::max(rank_[hi], rank_[t] + 1);
  graded_ = true;
  for (auto [lo, hi] : covers_)
    if (rank_[hi] != rank_[lo] + 1) {
      graded_ = false;
      break;
    }
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> labels,
                                  const std::function<bool(int, int)>& leq) {
  FinitePoset P;
  P.n_ = static_cast<int>(labels.size());
  P.labels_ = std::move(labels);
  const int n = P.n_;
  P.up_.assign(n, DynBitset(n));
  P.down_.assign(n, DynBitset(n));

  for (int i = 0; i < n; ++i) {
    if (!leq(i, i))
      throw PosetError("not reflexive at " + P.labels_[i]);
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) P.up_[i].set(j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (P.up_[i].test(j) && P.up_[j].test(i))
        throw PosetError("antisymmetry violated at " +
                         pair_text(P.labels_[i], P.labels_[j]));
  for (int i = 0; i < n; ++i) {
    // Transitive iff up(j) is contained in up(i) for every j above i.
    int bad_j = -1, bad_k = -1;
    P.up_[i].for_each([&](int j) {
      if (bad_j >= 0) return;
      const int k = P.up_[j].find_first_not_in(P.up_[i]);
      if (k >= 0) {
        bad_j = j;
        bad_k = k;
      }
    });
    if (bad_j >= 0)
      throw PosetError("transitivity violated at (" + P.labels_[i] + ", " +
                       P.labels_[bad_j] + ", " + P.labels_[bad_k] + ")");
  }
  for (int i = 0; i < n; ++i)
    P.up_[i].for_each([&](int j) { P.down_[j].set(i); });

  P.finalize();
  return P;
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<int, int>>& edges) {
  FinitePoset P;
  P.n_ = static_cast<int>(labels.size());
  P.labels_ = std::move(labels);
  const int n = P.n_;

  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("index out of range");
      if (a == b) throw PosetError("cycle detected at " + P.labels_[a]);
      if (seen.insert({a, b}).second) {
        out[a].push_back(b);
        ++indeg[b];
      }
    }
  }

  // Kahn topological sort; leftover in-degree means a cycle.
  std::vector<int> order;
  order.reserve(n);
  std::deque<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push_back(i);
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) {
    for (int i = 0; i < n; ++i)
      if (indeg[i] > 0) throw PosetError("cycle detected at " + P.labels_[i]);
  }

  P.up_.assign(n, DynBitset(n));
  P.down_.assign(n, DynBitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    P.up_[v].set(v);
    for (int w : out[v]) P.up_[v] |= P.up_[w];
  }
  for (int i = 0; i < n; ++i)
    P.up_[i].for_each([&](int j) { P.down_[j].set(i); });

  P.finalize(&out);
  return P;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (down_count_[i] == 1) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (up_[i].count() == 1) out.push_back(i);
  return out;
}

bool FinitePoset::is_bounded() const {
  return n_ > 0 && minimal_elements().size() == 1 &&
         maximal_elements().size() == 1;
}

FinitePoset::EulerianReport FinitePoset::eulerian_check() const {
  if (!graded_)
    throw PosetError("eulerian check requires a graded poset");
  EulerianReport rep;
  DynBitset evens(n_);
  for (int i = 0; i < n_; ++i)
    if (rank_[i] % 2 == 0) evens.set(i);
  for (int x = 0; x < n_; ++x) {
    int bad = -1;
    up_[x].for_each([&](int y) {
      if (bad >= 0 || y == x) return;
      const int total = DynBitset::and_count(up_[x], down_[y]);
      const int even = DynBitset::and_count3(up_[x], down_[y], evens);
      if (2 * even != total) bad = y;
    });
    if (bad >= 0) {
      rep.eulerian = false;
      rep.x = x;
      rep.y = bad;
      rep.text = "interval " + pair_text(labels_[x], labels_[bad]) +
                 " has unequal even/odd rank counts";
      return rep;
    }
  }
  return rep;
}

namespace {

// Minimal elements of `mask` have strictly smallest |down| among elements of
// `mask` lying below them, so the |down|-argmin over any subset of `mask`
// that is closed downward-within-mask is minimal in `mask`.
int argmin_down_count(const DynBitset& mask, const std::vector<int>& dcount) {
  int best = -1;
  mask.for_each([&](int z) {
    if (best < 0 || dcount[z] < dcount[best]) best = z;
  });
  return best;
}

}  // namespace

std::optional<int> FinitePoset::join(int x, int y) const {
  DynBitset ub(n_);
  DynBitset::and_into(up_[x], up_[y], ub);
  const int z0 = argmin_down_count(ub, down_count_);
  if (z0 < 0) return std::nullopt;
  if (!ub.is_subset_of(up_[z0])) return std::nullopt;
  return z0;
}

std::optional<int> FinitePoset::meet(int x, int y) const {
  DynBitset lb(n_);
  DynBitset::and_into(down_[x], down_[y], lb);
  // Dual argmin: maximal elements of lb have smallest |up|.
  int best = -1;
  lb.for_each([&](int z) {
    if (best < 0 || up_[z].count() < up_[best].count()) best = z;
  });
  if (best < 0) return std::nullopt;
  if (!lb.is_subset_of(down_[best])) return std::nullopt;
  return best;
}

FinitePoset::LatticeReport FinitePoset::lattice_check() const {
  LatticeReport rep;
  DynBitset scratch(n_);
  std::vector<int> up_count(n_);
  for (int i = 0; i < n_; ++i) up_count[i] = up_[i].count();
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (up_[x].test(y) || up_[y].test(x)) continue;  // comparable: trivial
      // Joins: least element of the common upper bounds, if any.
      DynBitset::and_into(up_[x], up_[y], scratch);
      int z0 = argmin_down_count(scratch, down_count_);
      if (z0 >= 0 && !scratch.is_subset_of(up_[z0])) {
        // A second minimal upper bound exists among those not above z0.
        DynBitset rest = scratch;
        for (int k = 0; k < n_; ++k)
          if (rest.test(k) && up_[z0].test(k)) rest.reset(k);
        const int z1 = argmin_down_count(rest, down_count_);
        rep.lattice = false;
        rep.x = x;
        rep.y = y;
        rep.a = z0;
        rep.b = z1;
        rep.join_side = true;
        rep.text = "pair " + pair_text(labels_[x], labels_[y]) +
                   " has minimal upper bounds " +
                   pair_text(labels_[z0], labels_[z1]);
        return rep;
      }
      if (z0 < 0) {
        rep.lattice = false;
        rep.x = x;
        rep.y = y;
        rep.join_side = true;
        rep.text = "pair " + pair_text(labels_[x], labels_[y]) +
                   " has no upper bound";
        return rep;
      }
      // Meets, dually.
      DynBitset::and_into(down_[x], down_[y], scratch);
      int w0 = -1;
      scratch.for_each([&](int z) {
        if (w0 < 0 || up_count[z] < up_count[w0]) w0 = z;
      });
      if (w0 >= 0 && !scratch.is_subset_of(down_[w0])) {
        DynBitset rest = scratch;
        for (int k = 0; k < n_; ++k)
          if (rest.test(k) && down_[w0].test(k)) rest.reset(k);
        int w1 = -1;
        rest.for_each([&](int z) {
          if (w1 < 0 || up_count[z] < up_count[w1]) w1 = z;
        });
        rep.lattice = false;
        rep.x = x;
        rep.y = y;
        rep.a = w0;
        rep.b = w1;
        rep.join_side = false;
        rep.text = "pair " + pair_text(labels_[x], labels_[y]) +
                   " has maximal lower bounds " +
                   pair_text(labels_[w0], labels_[w1]);
        return rep;
      }
      if (w0 < 0) {
        rep.lattice = false;
        rep.x = x;
        rep.y = y;
        rep.join_side = false;
        rep.text = "pair " + pair_text(labels_[x], labels_[y]) +
                   " has no lower bound";
        return rep;
      }
    }
  }
  return rep;
}

FinitePoset::DistributiveReport FinitePoset::distributive_check() const {
  if (n_ > 1000)
    throw PosetError("poset too large for distributivity check");
  DistributiveReport rep;
  std::vector<int> jt(static_cast<std::size_t>(n_) * n_);
  std::vector<int> mt(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x)
    for (int y = x; y < n_; ++y) {
      const auto j = join(x, y), m = meet(x, y);
      if (!j || !m) throw PosetError("distributivity check requires a lattice");
      jt[x * n_ + y] = jt[y * n_ + x] = *j;
      mt[x * n_ + y] = mt[y * n_ + x] = *m;
    }
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z) {
        const int lhs = mt[x * n_ + jt[y * n_ + z]];
        const int rhs = jt[mt[x * n_ + y] * n_ + mt[x * n_ + z]];
        if (lhs != rhs) {
          rep.distributive = false;
          rep.x = x;
          rep.y = y;
          rep.z = z;
          rep.text = "triple (" + labels_[x] + ", " + labels_[y] + ", " +
                     labels_[z] + ") violates distributivity";
          return rep;
        }
      }
  return rep;
}

FinitePoset FinitePoset::opposite() const {
  FinitePoset P;
  P.n_ = n_;
  P.labels_ = labels_;
  P.up_ = down_;
  P.down_ = up_;
  std::vector<std::vector<int>> out(n_);
  for (auto [lo, hi] : covers_) out[hi].push_back(lo);
  P.finalize(&out);
  return P;
}

FinitePoset FinitePoset::product(const FinitePoset& P, const FinitePoset& Q) {
  FinitePoset R;
  const int np = P.n_, nq = Q.n_;
  R.n_ = np * nq;
  R.labels_.reserve(R.n_);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) R.labels_.push_back(P.labels_[i] + "|" + Q.labels_[j]);
  R.up_.assign(R.n_, DynBitset(R.n_));
  R.down_.assign(R.n_, DynBitset(R.n_));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      const int idx = i * nq + j;
      P.up_[i].for_each([&](int a) {
        Q.up_[j].for_each([&](int b) { R.up_[idx].set(a * nq + b); });
      });
    }
  for (int i = 0; i < R.n_; ++i)
    R.up_[i].for_each([&](int j) { R.down_[j].set(i); });
  // Covers of a product order: one coordinate takes a cover step, the other
  // stays fixed.
  std::vector<std::vector<int>> out(R.n_);
  for (auto [lo, hi] : P.covers_)
    for (int j = 0; j < nq; ++j) out[lo * nq + j].push_back(hi * nq + j);
  for (auto [lo, hi] : Q.covers_)
    for (int i = 0; i < np; ++i) out[i * nq + lo].push_back(i * nq + hi);
  R.finalize(&out);
  return R;
}

std::optional<std::vector<int>> FinitePoset::isomorphism(const FinitePoset& P,
                                                         const FinitePoset& Q) {
  if (P.n_ != Q.n_ || P.covers_.size() != Q.covers_.size()) return std::nullopt;
  const int n = P.n_;

  auto signature = [](const FinitePoset& X, int i) {
    return std::tuple<int, int, int>(X.rank_[i],
                                     static_cast<int>(X.up_adj_[i].size()),
                                     static_cast<int>(X.down_adj_[i].size()));
  };
  std::vector<std::tuple<int, int, int>> sp(n), sq(n);
  for (int i = 0; i < n; ++i) {
    sp[i] = signature(P, i);
    sq[i] = signature(Q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Map P's elements in order of (signature, index); candidates in Q taken in
  // ascending index order for determinism.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sp[a] != sp[b] ? sp[a] < sp[b] : a < b;
  });

  std::vector<int> map_pq(n, -1), map_qp(n, -1);
  std::function<bool(int)> place = [&](int t) -> bool {
    if (t == n) return true;
    const int v = order[t];
    for (int w = 0; w < n; ++w) {
      if (map_qp[w] >= 0 || sq[w] != sp[v]) continue;
      bool ok = true;
      for (auto [u, k] : P.up_adj_[v]) {
        (void)k;
        if (map_pq[u] >= 0) {
          // v -> u must map onto a cover of Q.
          bool found = false;
          for (auto [uq, kq] : Q.up_adj_[w]) {
            (void)kq;
            if (uq == map_pq[u]) {
              found = true;
              break;
            }
          }
          if (!found) {
            ok = false;
            break;
          }
        }
      }
      if (ok)
        for (auto [u, k] : P.down_adj_[v]) {
          (void)k;
          if (map_pq[u] >= 0) {
            bool found = false;
            for (auto [uq, kq] : Q.down_adj_[w]) {
              (void)kq;
              if (uq == map_pq[u]) {
                found = true;
                break;
              }
            }
            if (!found) {
              ok = false;
              break;
            }
          }
        }
      if (!ok) continue;
      map_pq[v] = w;
      map_qp[w] = v;
      if (place(t + 1)) return true;
      map_pq[v] = -1;
      map_qp[w] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;

  // Full verification: cover sets must correspond exactly both ways.
  std::set<std::pair<int, int>> qc(Q.covers_.begin(), Q.covers_.end());
  std::set<std::pair<int, int>> mapped;
  for (auto [a, b] : P.covers_) mapped.insert({map_pq[a], map_pq[b]});
  if (mapped != qc) return std::nullopt;
  return map_pq;
}

// --- serialization ----------------------------------------------------------

namespace {

std::string move_text(const Move& m) {
  return std::string(1, m.first) + std::to_string(m.second);
}

}  // namespace

nlohmann::ordered_json poset_to_json(
    const FinitePoset& P, const std::string& name, const PosetProperties& props,
    const std::vector<CoverAnnotation>* annotations) {
  nlohmann::ordered_json j;
  j["name"] = name;
  const auto ranks = P.graded_ranks();
  auto elements = nlohmann::ordered_json::array();
  for (int i = 0; i < P.size(); ++i) {
    nlohmann::ordered_json e;
    e["id"] = i;
    e["label"] = P.label(i);
    if (ranks)
      e["rank"] = (*ranks)[i];
    else
      e["rank"] = nullptr;
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : P.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  nlohmann::ordered_json pj;
  pj["graded"] = props.graded;
  pj["lattice"] = props.lattice;
  pj["distributive"] =
      props.distributive ? nlohmann::ordered_json(*props.distributive)
                         : nlohmann::ordered_json(nullptr);
  pj["eulerian"] = props.eulerian ? nlohmann::ordered_json(*props.eulerian)
                                  : nlohmann::ordered_json(nullptr);
  j["properties"] = std::move(pj);
  if (annotations) {
    auto ann = nlohmann::ordered_json::array();
    const auto& covs = P.covers();
    for (std::size_t k = 0; k < covs.size(); ++k) {
      nlohmann::ordered_json row = {covs[k].first, covs[k].second,
                                    (*annotations)[k].degree()};
      for (const auto& m : (*annotations)[k].moves) row.push_back(move_text(m));
      ann.push_back(std::move(row));
    }
    j["covers_annotated"] = std::move(ann);
  }
  return j;
}

std::string poset_to_dot(const FinitePoset& P, const std::string& name,
                         const std::vector<CoverAnnotation>* annotations) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < P.size(); ++i)
    os << "  n" << i << " [label=\"" << P.label(i) << "\"];\n";
  const auto& covs = P.covers();
  for (std::size_t k = 0; k < covs.size(); ++k) {
    os << "  n" << covs[k].first << " -> n" << covs[k].second;
    if (annotations && (*annotations)[k].degree() >= 2) os << " [penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace renner
