#pragma once

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchpack/geom.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Search caps keep the exact oracles at desk scale. MATCHPACK_BUDGET=<n>
/// (or an explicit budget) raises them, up to hard ceilings dictated by the
/// fixed-width edge bitsets.
struct OracleLimits {
  int enumerate_cap = 16;
  int max_packing_cap = 12;
  int noncrossing_cap = 12;
  int pmp_cap = 10;

  static constexpr int kHardEnumerate = 22;
  static constexpr int kHardPacking = 14;
  static constexpr int kHardPmp = 12;

  OracleLimits with_budget(int budget) const {
    OracleLimits l = *this;
    if (budget > 0) {
      l.enumerate_cap = std::min(kHardEnumerate, std::max(l.enumerate_cap, budget));
      l.max_packing_cap = std::min(kHardPacking, std::max(l.max_packing_cap, budget));
      l.noncrossing_cap = std::min(kHardPacking, std::max(l.noncrossing_cap, budget));
      l.pmp_cap = std::min(kHardPmp, std::max(l.pmp_cap, budget));
    }
    return l;
  }
  static OracleLimits from_env() {
    OracleLimits l;
    if (const char* b = std::getenv("MATCHPACK_BUDGET"))
      return l.with_budget(std::atoi(b));
    return l;
  }
};

namespace detail {

inline void require_cap(int n, int cap, const char* who) {
  if (n > cap)
    throw CapExceeded(std::string(who) + ": n=" + std::to_string(n) +
                      " exceeds search cap " + std::to_string(cap) +
                      " (raise MATCHPACK_BUDGET to override)");
}

}  // namespace detail

/// Precomputed edge table and exact pairwise crossing matrix for one point
/// set; every oracle query reduces to bitset operations against it.
class PlaneContext {
 public:
  static constexpr int kMaxEdges = 256;
  using EdgeMask = std::bitset<kMaxEdges>;

  explicit PlaneContext(const PointSet& P) : P_(&P), n_(P.size()) {
    if (n_ < 2 || n_ > 22)
      throw std::invalid_argument("PlaneContext: supports 2..22 points");
    id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        id_[static_cast<std::size_t>(i) * n_ + j] = static_cast<int>(edges_.size());
        id_[static_cast<std::size_t>(j) * n_ + i] = static_cast<int>(edges_.size());
        edges_.emplace_back(i, j);
      }
    cross_.assign(edges_.size(), EdgeMask{});
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (std::size_t f = e + 1; f < edges_.size(); ++f)
        if (segments_cross(P, edges_[e], edges_[f])) {
          cross_[e].set(f);
          cross_[f].set(e);
        }
    if (n_ >= 3) {
      const std::vector<int> hull = convex_hull(P);
      for (std::size_t i = 0; i < hull.size(); ++i)
        hull_.set(static_cast<std::size_t>(
            edge_id(hull[i], hull[(i + 1) % hull.size()])));
    }
  }

  const PointSet& points() const { return *P_; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_id(int i, int j) const {
    return id_[static_cast<std::size_t>(i) * n_ + j];
  }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const EdgeMask& cross_row(int id) const {
    return cross_[static_cast<std::size_t>(id)];
  }
  const EdgeMask& hull_mask() const { return hull_; }

  EdgeMask mask_of(const Matching& M) const {
    EdgeMask m;
    for (const Edge& e : M.edges)
      m.set(static_cast<std::size_t>(edge_id(e.a, e.b)));
    return m;
  }

 private:
  const PointSet* P_;
  int n_;
  std::vector<int> id_;
  std::vector<Edge> edges_;
  std::vector<EdgeMask> cross_;
  EdgeMask hull_;
};

struct OracleReport {
  std::string kind;
  BigInt value = 0;
  Packing witness;
  std::uint64_t nodes_explored = 0;
  double time_ms = 0;
};

namespace detail {

struct EnumOut {
  std::vector<Matching> matchings;
  std::vector<PlaneContext::EdgeMask> masks;
  std::uint64_t nodes = 0;
};

/// DFS on the lowest unmatched point, partners in increasing index,
/// crossing checks against the chosen-edge conflict mask. Canonical and
/// duplicate-free by construction.
inline EnumOut enumerate_impl(const PlaneContext& ctx,
                              const PlaneContext::EdgeMask& forbidden,
                              bool stop_at_first) {
  EnumOut out;
  const int n = ctx.n();
  std::vector<Edge> chosen;
  PlaneContext::EdgeMask chosen_mask, conflict = forbidden;
  std::uint32_t used = 0;
  auto rec = [&](auto&& self) -> bool {
    ++out.nodes;
    if (static_cast<int>(chosen.size()) == n / 2) {
      out.matchings.emplace_back(n, chosen);
      out.masks.push_back(chosen_mask);
      return stop_at_first;
    }
    int v = 0;
    while (used & (1u << v)) ++v;
    for (int w = v + 1; w < n; ++w) {
      if (used & (1u << w)) continue;
      const int e = ctx.edge_id(v, w);
      if (conflict.test(static_cast<std::size_t>(e))) continue;
      chosen.emplace_back(v, w);
      chosen_mask.set(static_cast<std::size_t>(e));
      const PlaneContext::EdgeMask saved = conflict;
      conflict |= ctx.cross_row(e);
      used |= (1u << v) | (1u << w);
      const bool stop = self(self);
      used &= ~((1u << v) | (1u << w));
      conflict = saved;
      chosen_mask.reset(static_cast<std::size_t>(e));
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec);
  return out;
}

inline bool has_plane_pm_avoiding(const PlaneContext& ctx,
                                  const PlaneContext::EdgeMask& forbidden,
                                  std::uint64_t* nodes = nullptr) {
  EnumOut out = enumerate_impl(ctx, forbidden, true);
  if (nodes != nullptr) *nodes += out.nodes;
  return !out.matchings.empty();
}

/// Growable bitset for matching-level adjacency.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int n)
      : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}
  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
  void reset(int i) {
    w_[static_cast<std::size_t>(i >> 6)] &= ~(1ull << (i & 63));
  }
  bool test(int i) const {
    return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ull;
  }
  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  int lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  void and_not(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Branch-and-bound maximum family of pairwise-compatible matchings.
/// Bounding: all matchings giving some anchor vertex the same partner share
/// that edge and are pairwise incompatible, so grouping the candidates by
/// their partner at the most discriminating anchor is a valid coloring with
/// at most n-1 classes. A resource bound on a per-matching weight (sum over
/// any family cannot exceed `budget`) prunes further.
struct CliqueSearch {
  const std::vector<DynBitset>& adj;
  const std::vector<std::vector<int>>& partner;  // [matching][vertex]
  int n;
  const std::vector<int>& weight;
  int budget;
  int best = 0;
  std::vector<int> best_set;
  std::uint64_t nodes = 0;
  std::vector<int> cur;
  int cur_weight = 0;

  void expand(DynBitset cand) {
    ++nodes;
    if (cand.empty()) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
      }
      return;
    }
    std::vector<int> members;
    {
      DynBitset scan = cand;
      while (!scan.empty()) {
        const int v = scan.lowest();
        scan.reset(v);
        members.push_back(v);
      }
    }
    int anchor = 0, anchor_classes = 1 << 30;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      int classes = 0;
      for (int v : members) {
        const int p = partner[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)];
        if (count[static_cast<std::size_t>(p)]++ == 0) ++classes;
      }
      for (int v : members)
        count[static_cast<std::size_t>(
            partner[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)])] = 0;
      if (classes < anchor_classes) {
        anchor_classes = classes;
        anchor = a;
      }
    }
    // order members class by class; color = 1-based class rank
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    {
      std::vector<std::vector<int>> classes(static_cast<std::size_t>(n));
      for (int v : members)
        classes[static_cast<std::size_t>(
                    partner[static_cast<std::size_t>(v)]
                           [static_cast<std::size_t>(anchor)])]
            .push_back(v);
      int color = 0;
      for (const auto& cls : classes) {
        if (cls.empty()) continue;
        ++color;
        for (int v : cls) order.emplace_back(v, color);
      }
    }
    for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
      const auto [v, color] = order[static_cast<std::size_t>(t)];
      if (static_cast<int>(cur.size()) + color <= best) return;
      if (cur_weight + weight[static_cast<std::size_t>(v)] > budget) {
        cand.reset(v);
        continue;
      }
      cur.push_back(v);
      cur_weight += weight[static_cast<std::size_t>(v)];
      DynBitset next = cand;
      next &= adj[static_cast<std::size_t>(v)];
      expand(std::move(next));
      cur_weight -= weight[static_cast<std::size_t>(v)];
      cur.pop_back();
      cand.reset(v);
    }
  }
};

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace detail

/// All plane perfect matchings of P, canonically ordered.
inline std::vector<Matching> enumerate_plane_matchings(
    const PointSet& P, const OracleLimits& limits = OracleLimits::from_env()) {
  detail::require_even(P.size(), 2, "enumerate_plane_matchings");
  detail::require_cap(P.size(), limits.enumerate_cap,
                      "enumerate_plane_matchings");
  const PlaneContext ctx(P);
  return detail::enumerate_impl(ctx, {}, false).matchings;
}

/// Number of perfect matchings of K_n, by double factorial and by the
/// fixed-edge recurrence; the two routes must agree.
inline BigInt count_abstract_matchings(int n) {
  detail::require_even(n, 2, "count_abstract_matchings");
  BigInt df = 1;
  for (int k = n - 1; k >= 1; k -= 2) df *= k;
  std::vector<BigInt> rec(static_cast<std::size_t>(n / 2 + 1));
  for (int k = 2; k <= n; k += 2) {
    BigInt v;
    if (k == 2)
      v = 1;
    else if (k == 4)
      v = 3;
    else
      v = rec[static_cast<std::size_t>(k / 2 - 1)] +
          2 * (BigInt(k - 2) * (k - 3) / 2) *
              rec[static_cast<std::size_t>(k / 2 - 2)];
    rec[static_cast<std::size_t>(k / 2)] = v;
  }
  if (rec[static_cast<std::size_t>(n / 2)] != df)
    throw std::logic_error(
        "count_abstract_matchings: recurrence disagrees with double factorial");
  return df;
}

/// Exact count of plane perfect matchings (enumeration-backed).
inline OracleReport count_plane_matchings(
    const PointSet& P, const OracleLimits& limits = OracleLimits::from_env()) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::require_even(P.size(), 2, "count_plane_matchings");
  detail::require_cap(P.size(), limits.enumerate_cap, "count_plane_matchings");
  const PlaneContext ctx(P);
  detail::EnumOut out = detail::enumerate_impl(ctx, {}, false);
  OracleReport rep;
  rep.kind = "count";
  rep.value = static_cast<std::int64_t>(out.matchings.size());
  rep.nodes_explored = out.nodes;
  rep.time_ms = detail::ms_since(t0);
  return rep;
}

namespace detail {

inline OracleReport clique_report(const PointSet& P, const char* kind,
                                  bool noncrossing, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  require_even(P.size(), 2, kind);
  require_cap(P.size(), cap, kind);
  const PlaneContext ctx(P);
  EnumOut all = enumerate_impl(ctx, {}, false);
  const int N = static_cast<int>(all.matchings.size());
  std::vector<DynBitset> adj(static_cast<std::size_t>(N), DynBitset(N));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      if ((all.masks[a] & all.masks[b]).any()) continue;
      if (noncrossing) {
        bool ok = true;
        for (const Edge& e : all.matchings[a].edges) {
          const int id = ctx.edge_id(e.a, e.b);
          if ((ctx.cross_row(id) & all.masks[b]).any()) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      adj[a].set(b);
      adj[b].set(a);
    }
  std::vector<int> hull_weight(static_cast<std::size_t>(N), 0);
  for (int a = 0; a < N; ++a)
    hull_weight[a] =
        static_cast<int>((all.masks[a] & ctx.hull_mask()).count());
  std::vector<std::vector<int>> partner(
      static_cast<std::size_t>(N),
      std::vector<int>(static_cast<std::size_t>(P.size()), 0));
  for (int v = 0; v < N; ++v)
    for (const Edge& e : all.matchings[static_cast<std::size_t>(v)].edges) {
      partner[v][static_cast<std::size_t>(e.a)] = e.b;
      partner[v][static_cast<std::size_t>(e.b)] = e.a;
    }
  CliqueSearch search{adj, partner, P.size(), hull_weight,
                      static_cast<int>(ctx.hull_mask().count())};
  // greedy warm starts activate the bound from the first search node
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> greedy;
    DynBitset left(N);
    for (int v = 0; v < N; ++v) left.set(v);
    while (!left.empty()) {
      const int v = pass == 0 ? left.lowest() : [&] {
        int bestv = -1, bestdeg = -1;
        DynBitset scan = left;
        while (!scan.empty()) {
          const int u = scan.lowest();
          scan.reset(u);
          DynBitset inter = left;
          inter &= adj[static_cast<std::size_t>(u)];
          const int deg = inter.count();
          if (deg > bestdeg) {
            bestdeg = deg;
            bestv = u;
          }
        }
        return bestv;
      }();
      greedy.push_back(v);
      left &= adj[static_cast<std::size_t>(v)];
    }
    if (static_cast<int>(greedy.size()) > search.best) {
      search.best = static_cast<int>(greedy.size());
      search.best_set = greedy;
    }
  }
  DynBitset cand(N);
  for (int v = 0; v < N; ++v) cand.set(v);
  search.expand(std::move(cand));

  OracleReport rep;
  rep.kind = kind;
  rep.value = search.best;
  rep.nodes_explored = all.nodes + search.nodes;
  rep.witness.n = P.size();
  for (int v : search.best_set)
    rep.witness.matchings.push_back(all.matchings[static_cast<std::size_t>(v)]);
  const VerifyReport check = verify_packing(P, rep.witness, true, noncrossing);
  if (!check.valid)
    throw std::logic_error(std::string(kind) + ": witness failed verification");
  rep.time_ms = ms_since(t0);
  return rep;
}

}  // namespace detail

/// Exact maximum number of pairwise edge-disjoint plane perfect matchings,
/// with a witness packing.
inline OracleReport max_packing(
    const PointSet& P, const OracleLimits& limits = OracleLimits::from_env()) {
  return detail::clique_report(P, "max_packing", false,
                               limits.max_packing_cap);
}

/// Exact maximum family of pairwise non-crossing edge-disjoint plane
/// matchings, with a witness.
inline OracleReport max_noncrossing_packing(
    const PointSet& P, const OracleLimits& limits = OracleLimits::from_env()) {
  return detail::clique_report(P, "max_noncrossing", true,
                               limits.noncrossing_cap);
}

/// Smallest set of edge-disjoint plane matchings whose removal leaves no
/// plane perfect matching; witness is the removal set.
inline OracleReport pmp_exact(
    const PointSet& P, const OracleLimits& limits = OracleLimits::from_env()) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::require_even(P.size(), 2, "pmp_exact");
  detail::require_cap(P.size(), limits.pmp_cap, "pmp_exact");
  const PlaneContext ctx(P);
  detail::EnumOut all = detail::enumerate_impl(ctx, {}, false);
  const int N = static_cast<int>(all.matchings.size());
  std::uint64_t nodes = all.nodes;
  std::vector<int> family;
  auto search = [&](auto&& self, int k, int from,
                    const PlaneContext::EdgeMask& used) -> bool {
    ++nodes;
    if (static_cast<int>(family.size()) == k)
      return !detail::has_plane_pm_avoiding(ctx, used, &nodes);
    for (int v = from; v < N; ++v) {
      if ((used & all.masks[static_cast<std::size_t>(v)]).any()) continue;
      family.push_back(v);
      if (self(self, k, v + 1,
               used | all.masks[static_cast<std::size_t>(v)]))
        return true;
      family.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= std::max(1, std::min(N, P.size() - 1)); ++k) {
    family.clear();
    if (search(search, k, 0, {})) {
      OracleReport rep;
      rep.kind = "pmp";
      rep.value = k;
      rep.nodes_explored = nodes;
      rep.witness.n = P.size();
      for (int v : family)
        rep.witness.matchings.push_back(
            all.matchings[static_cast<std::size_t>(v)]);
      const VerifyReport check = verify_packing(P, rep.witness, true, false);
      if (!check.valid)
        throw std::logic_error("pmp_exact: witness failed verification");
      rep.time_ms = detail::ms_since(t0);
      return rep;
    }
  }
  throw std::logic_error("pmp_exact: no removal family destroys all matchings");
}

}  // namespace matchpack
