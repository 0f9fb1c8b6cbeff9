#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matchpack/bichromatic.hpp"
#include "matchpack/geom.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

/// x' = s*x + y with integer (or, in the last resort, rational) s > 0.
/// The map has positive determinant, so every orientation and crossing
/// predicate transfers exactly between the original and sheared sets.
struct ShearedPoints {
  PointSet pts;
  Rat shear = 0;
};

inline ShearedPoints ensure_distinct_x(const PointSet& P) {
  auto all_distinct = [](const PointSet& Q) {
    std::vector<Rat> xs;
    xs.reserve(static_cast<std::size_t>(Q.size()));
    for (const Point& p : Q.points) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (all_distinct(P)) return {P, Rat(0)};
  auto apply = [&](const Rat& s) {
    PointSet Q;
    Q.meta = P.meta;
    Q.points.reserve(P.points.size());
    for (const Point& p : P.points) Q.points.emplace_back(s * p.x + p.y, p.y);
    return Q;
  };
  std::vector<Rat> candidates;
  for (int s = 1; s <= 8; ++s) candidates.emplace_back(s);
  for (int k = 4; k <= 16; ++k) candidates.emplace_back(std::int64_t(1) << k);
  for (const Rat& s : candidates) {
    PointSet Q = apply(s);
    if (all_distinct(Q)) return {std::move(Q), s};
  }
  // s larger than max|dy|/min|dx| over pairs with distinct x can never
  // collide; compute that bound exactly.
  Rat min_dx = 0, max_dy = 0;
  std::vector<Rat> xs, ys;
  for (const Point& p : P.points) xs.push_back(p.x), ys.push_back(p.y);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Rat d = xs[i] - xs[i - 1];
    if (d > 0 && (min_dx == 0 || d < min_dx)) min_dx = d;
  }
  if (!ys.empty()) max_dy = ys.back() - ys.front();
  if (min_dx == 0)
    throw std::invalid_argument("ensure_distinct_x: all x equal with ties");
  const Rat s = max_dy / min_dx + 1;
  PointSet Q = apply(s);
  if (!all_distinct(Q))
    throw std::logic_error("ensure_distinct_x: bound shear failed");
  return {std::move(Q), s};
}

namespace detail {

inline std::vector<int> sorted_by_x(const PointSet& P,
                                    const std::vector<int>& idx) {
  std::vector<int> order = idx;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return coord_less(P[a], P[b]); });
  return order;
}

inline std::vector<int> all_indices(int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

/// True iff `listing` 0..n-1 is a cyclic rotation of the ccw hull order,
/// i.e. the points are in convex position and listed in ccw radial order.
inline bool is_ccw_convex_listing(const PointSet& P) {
  const int n = P.size();
  if (n < 3) return false;
  std::vector<int> hull;
  try {
    hull = convex_hull(P);
  } catch (const std::exception&) {
    return false;
  }
  if (static_cast<int>(hull.size()) != n) return false;
  const int pos =
      static_cast<int>(std::find(hull.begin(), hull.end(), 0) - hull.begin());
  for (int i = 0; i < n; ++i)
    if (hull[(pos + i) % n] != i) return false;
  return true;
}

}  // namespace detail

/// Parallel classes on points in convex position listed in ccw radial
/// order: matching i pairs the polygon edge (i-1, i) with all chords
/// parallel to it. Exactly n/2 matchings, pairwise edge-disjoint, each
/// plane; together they use every hull edge exactly once.
inline Packing pack_convex(const PointSet& P) {
  const int n = P.size();
  detail::require_even(n, 4, "pack_convex");
  if (!detail::is_ccw_convex_listing(P))
    throw std::invalid_argument(
        "pack_convex: points not in convex position in ccw radial order");
  Packing pack;
  pack.n = n;
  for (int i = 0; i < n / 2; ++i) {
    Matching M;
    M.n = n;
    for (int j = 1; j <= n / 2; ++j)
      M.edges.emplace_back((i + j - 1) % n, (n + i - j) % n);
    pack.matchings.push_back(std::move(M));
  }
  return pack;
}

/// Spoke-and-parallels classes on the regular wheel: matching i is the
/// spoke (i, center) plus the rim chords parallel to it. n/2 - 1 matchings.
inline Packing pack_wheel(const PointSet& P) {
  const int n = P.size();
  detail::require_even(n, 6, "pack_wheel");
  const int m = n - 1;  // rim size
  const int center = n - 1;
  {
    PointSet rim;
    rim.points.assign(P.points.begin(), P.points.end() - 1);
    if (!detail::is_ccw_convex_listing(rim))
      throw std::invalid_argument(
          "pack_wheel: rim 0..n-2 not convex in ccw radial order");
    if (!strictly_inside_hull(P, detail::all_indices(m), P[center]))
      throw std::invalid_argument("pack_wheel: last point not interior");
  }
  const int cu = (m - 1 + 3) / 4;  // ceil((n-2)/4)
  const int fl = (m - 1) / 4;      // floor((n-2)/4)
  auto rim_mod = [m](int v) { return ((v % m) + m) % m; };
  Packing pack;
  pack.n = n;
  for (int i = 0; i <= n / 2 - 2; ++i) {
    Matching M;
    M.n = n;
    M.edges.emplace_back(i, center);
    for (int j = 1; j <= cu; ++j)
      M.edges.emplace_back(rim_mod(i + j), rim_mod(i + 2 * cu - j + 1));
    for (int j = 1; j <= fl; ++j)
      M.edges.emplace_back(rim_mod(i - j), rim_mod(i - 2 * fl + j - 1));
    if (!M.is_perfect())
      throw std::logic_error("pack_wheel: class is not a perfect matching");
    pack.matchings.push_back(std::move(M));
  }
  const VerifyReport rep = verify_packing(P, pack, true, false);
  if (!rep.valid)
    throw std::invalid_argument(
        "pack_wheel: layout contract violated: " + rep.problems.front());
  return pack;
}

enum class ThreeCase { FourK, InteriorCross, SharedRed, SharedBlue };

struct ThreeInfo {
  ThreeCase kind = ThreeCase::FourK;
  Edge tangent1{0, 1};
  Edge tangent2{0, 1};
};

namespace detail {

inline Point line_intersection(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  const Rat e1x = b.x - a.x, e1y = b.y - a.y;
  const Rat e2x = d.x - c.x, e2y = d.y - c.y;
  const Rat den = e1x * e2y - e1y * e2x;
  if (den == 0)
    throw std::logic_error("line_intersection: parallel lines");
  const Rat t = ((c.x - a.x) * e2y - (c.y - a.y) * e2x) / den;
  return Point(a.x + t * e1x, a.y + t * e1y);
}

/// Clockwise order around c for points confined to one side of c; ties
/// (same ray from c) are broken near-to-far.
inline void sort_clockwise_around(const PointSet& P, const Point& c,
                                  std::vector<int>& idx) {
  std::sort(idx.begin(), idx.end(), [&](int u, int v) {
    const int s = orient(c, P[u], P[v]);
    if (s != 0) return s < 0;
    return dist2(c, P[u]) < dist2(c, P[v]);
  });
}

/// Three edge-disjoint plane matchings covering `idx` (even size >= 8).
inline std::array<EdgeList, 3> three_matchings_subset(const PointSet& P,
                                                      const std::vector<int>& idx,
                                                      ThreeInfo* info) {
  const int n = static_cast<int>(idx.size());
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("pack_three: need even n >= 8");
  const std::vector<int> order = sorted_by_x(P, idx);
  for (int i = 1; i < n; ++i)
    if (!(P[order[i - 1]].x < P[order[i]].x))
      throw std::invalid_argument("pack_three: x-coordinates must be distinct");
  const int m = n / 2;
  std::vector<int> red(order.begin(), order.begin() + m);
  std::vector<int> blue(order.begin() + m, order.end());
  EdgeList m1, m2, m3;
  ThreeInfo local;
  if (n % 4 == 0) {
    local.kind = ThreeCase::FourK;
    for (const auto& side : {red, blue}) {
      const Cycle cyc = plane_hamiltonian_cycle_subset(P, side);
      auto [ev, od] = split_cycle_edges(cyc);
      m1.insert(m1.end(), ev.begin(), ev.end());
      m2.insert(m2.end(), od.begin(), od.end());
    }
    m3 = cut_rb_matching(P, red, blue);
  } else {
    const CrossingTangents tg = crossing_tangents(P, red, blue);
    local.tangent1 = Edge(tg.t1.first, tg.t1.second);
    local.tangent2 = Edge(tg.t2.first, tg.t2.second);
    if (tg.t1.first != tg.t2.first && tg.t1.second != tg.t2.second) {
      local.kind = ThreeCase::InteriorCross;
      const Point c = line_intersection(P[tg.t1.first], P[tg.t1.second],
                                        P[tg.t2.first], P[tg.t2.second]);
      std::vector<int> rs = red, bs = blue;
      sort_clockwise_around(P, c, rs);
      sort_clockwise_around(P, c, bs);
      if (orient(c, P[rs.front()], P[bs.front()]) != 0)
        std::reverse(bs.begin(), bs.end());
      if (orient(c, P[rs.front()], P[bs.front()]) != 0)
        throw std::logic_error("pack_three: tangent pairing mismatch");
      Cycle cyc = rs;
      cyc.insert(cyc.end(), bs.rbegin(), bs.rend());
      auto [ev, od] = split_cycle_edges(cyc);
      m1 = std::move(ev);
      m2 = std::move(od);
    } else {
      // the tangents meet at a shared endpoint; fold it into the other side
      const bool shared_red = tg.t1.first == tg.t2.first;
      local.kind = shared_red ? ThreeCase::SharedRed : ThreeCase::SharedBlue;
      const int apex = shared_red ? tg.t1.first : tg.t1.second;
      std::vector<int> own = shared_red ? red : blue;   // side losing the apex
      std::vector<int> fan = shared_red ? blue : red;   // side gaining it
      own.erase(std::find(own.begin(), own.end(), apex));
      const Cycle cyc_own = plane_hamiltonian_cycle_subset(P, own);
      auto [ev1, od1] = split_cycle_edges(cyc_own);
      sort_clockwise_around(P, P[apex], fan);
      Cycle cyc_fan;
      cyc_fan.push_back(apex);
      cyc_fan.insert(cyc_fan.end(), fan.begin(), fan.end());
      auto [ev2, od2] = split_cycle_edges(cyc_fan);
      m1 = std::move(ev1);
      m1.insert(m1.end(), ev2.begin(), ev2.end());
      m2 = std::move(od1);
      m2.insert(m2.end(), od2.begin(), od2.end());
    }
    m3 = tangent_rb_matching_avoiding(P, red, blue,
                                      {local.tangent1, local.tangent2});
    for (const Edge& e : m3)
      if (e == local.tangent1 || e == local.tangent2)
        throw std::logic_error("pack_three: tangent matching reused a crossing tangent");
  }
  if (info != nullptr) *info = local;
  return {std::move(m1), std::move(m2), std::move(m3)};
}

}  // namespace detail

/// Three pairwise edge-disjoint plane matchings on any general-position set
/// of n >= 8 points (x-ties removed by an exact shear first).
inline Packing pack_three(const PointSet& P, ThreeInfo* info = nullptr) {
  const int n = P.size();
  detail::require_even(n, 8, "pack_three");
  const ShearedPoints sheared = ensure_distinct_x(P);
  const auto ms =
      detail::three_matchings_subset(sheared.pts, detail::all_indices(n), info);
  Packing pack;
  pack.n = n;
  for (const EdgeList& e : ms) pack.matchings.emplace_back(n, e);
  return pack;
}

struct PackTreeNode {
  int m = 0;       // even point count handled by this subtree
  int level = 0;   // root is level 0
  int left = -1;
  int right = -1;
  int parent = -1;
  bool right_child = false;
  int leaf_lo = 0;  // point positions [leaf_lo, leaf_hi) in x-order
  int leaf_hi = 0;

  bool is_leaf() const { return left < 0; }
};

struct PackTree {
  int n = 0;
  std::vector<PackTreeNode> nodes;
  int root = 0;
  int min_leaf_depth = 0;  // L: fewest edges from root to any leaf

  std::vector<std::vector<int>> levels() const {
    std::vector<std::vector<int>> by_level;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      const int l = nodes[static_cast<std::size_t>(i)].level;
      if (l >= static_cast<int>(by_level.size()))
        by_level.resize(static_cast<std::size_t>(l) + 1);
      by_level[static_cast<std::size_t>(l)].push_back(i);
    }
    return by_level;
  }
};

/// The halving tree: a node holding m splits into m/2 + m/2 when 4 | m,
/// otherwise into two even parts differing by exactly 2, the smaller part
/// going left under the root or a left child and right under a right child.
inline PackTree build_pack_tree(int n) {
  detail::require_even(n, 2, "build_pack_tree");
  PackTree t;
  t.n = n;
  auto make = [&](auto&& self, int m, int level, int parent,
                  bool right_child) -> int {
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(PackTreeNode{m, level, -1, -1, parent, right_child, 0, 0});
    if (m > 2) {
      int lm, rm;
      if (m % 4 == 0) {
        lm = rm = m / 2;
      } else if (!right_child) {
        lm = 2 * (m / 4);
        rm = m - lm;
      } else {
        rm = 2 * (m / 4);
        lm = m - rm;
      }
      const int lid = self(self, lm, level + 1, id, false);
      const int rid = self(self, rm, level + 1, id, true);
      t.nodes[static_cast<std::size_t>(id)].left = lid;
      t.nodes[static_cast<std::size_t>(id)].right = rid;
    }
    return id;
  };
  t.root = make(make, n, 0, -1, false);
  // leaf spans, in-order
  int next = 0;
  auto assign = [&](auto&& self, int id) -> void {
    PackTreeNode& u = t.nodes[static_cast<std::size_t>(id)];
    if (u.is_leaf()) {
      u.leaf_lo = next;
      next += 2;
      u.leaf_hi = next;
      return;
    }
    self(self, u.left);
    self(self, u.right);
    u.leaf_lo = t.nodes[static_cast<std::size_t>(u.left)].leaf_lo;
    u.leaf_hi = t.nodes[static_cast<std::size_t>(u.right)].leaf_hi;
  };
  assign(assign, t.root);
  t.min_leaf_depth = n;
  for (const PackTreeNode& u : t.nodes)
    if (u.is_leaf()) t.min_leaf_depth = std::min(t.min_leaf_depth, u.level);
  return t;
}

/// One matching per full tree level: each internal node contributes the
/// min-length matching between its left and right point blocks, plus the
/// extreme leaf pair when its two children differ in size.
inline Packing pack_logn(const PointSet& P) {
  const int n = P.size();
  detail::require_even(n, 4, "pack_logn");
  const PackTree tree = build_pack_tree(n);
  const ShearedPoints sheared = ensure_distinct_x(P);
  const PointSet& Q = sheared.pts;
  const std::vector<int> order = detail::sorted_by_x(Q, detail::all_indices(n));
  const int L = tree.min_leaf_depth;
  Packing pack;
  pack.n = n;
  pack.matchings.assign(static_cast<std::size_t>(L), Matching{});
  for (Matching& M : pack.matchings) M.n = n;
  for (const PackTreeNode& u : tree.nodes) {
    if (u.level >= L) continue;
    const PackTreeNode& lc = tree.nodes[static_cast<std::size_t>(u.left)];
    const int lo = u.leaf_lo, hi = u.leaf_hi, mid = lc.leaf_hi;
    auto block = [&](int from, int to) {
      return std::vector<int>(order.begin() + from, order.begin() + to);
    };
    EdgeList part;
    if (u.m % 4 == 0) {
      part = min_rb_matching(Q, block(lo, mid), block(mid, hi)).edges;
    } else if (!u.right_child) {
      part = min_rb_matching(Q, block(lo, mid), block(mid, hi - 2)).edges;
      part.emplace_back(order[hi - 2], order[hi - 1]);
    } else {
      part = min_rb_matching(Q, block(lo + 2, mid), block(mid, hi)).edges;
      part.emplace_back(order[lo], order[lo + 1]);
    }
    EdgeList& dst = pack.matchings[static_cast<std::size_t>(u.level)].edges;
    dst.insert(dst.end(), part.begin(), part.end());
  }
  for (const Matching& M : pack.matchings)
    if (!M.is_perfect())
      throw std::logic_error("pack_logn: level matching not perfect");
  return pack;
}

/// For n = 2^k: recursive halving by vertical lines; sibling packings are
/// merged level-by-level and each split adds one crossing matching from the
/// ham-sandwich recursion. log2(n) matchings.
inline Packing pack_power_of_two(const PointSet& P) {
  const int n = P.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("pack_power_of_two: n must be a power of two");
  const ShearedPoints sheared = ensure_distinct_x(P);
  const PointSet& Q = sheared.pts;
  const std::vector<int> order = detail::sorted_by_x(Q, detail::all_indices(n));
  auto rec = [&](auto&& self, int lo, int hi) -> std::vector<EdgeList> {
    if (hi - lo == 2) return {EdgeList{Edge(order[lo], order[lo + 1])}};
    const int mid = lo + (hi - lo) / 2;
    std::vector<EdgeList> left = self(self, lo, mid);
    const std::vector<EdgeList> right = self(self, mid, hi);
    for (std::size_t i = 0; i < left.size(); ++i)
      left[i].insert(left[i].end(), right[i].begin(), right[i].end());
    left.push_back(cut_rb_matching(
        Q, std::vector<int>(order.begin() + lo, order.begin() + mid),
        std::vector<int>(order.begin() + mid, order.begin() + hi)));
    return left;
  };
  Packing pack;
  pack.n = n;
  for (EdgeList& e : rec(rec, 0, n)) pack.matchings.emplace_back(n, std::move(e));
  return pack;
}

enum class AutoStrategy {
  Single,
  Convex,
  Wheel,
  PowerOfTwo,
  BlocksAndCuts,
  Three,
  LogN,
  CycleSplit
};

inline const char* to_string(AutoStrategy s) {
  switch (s) {
    case AutoStrategy::Single: return "single";
    case AutoStrategy::Convex: return "convex";
    case AutoStrategy::Wheel: return "wheel";
    case AutoStrategy::PowerOfTwo: return "pow2";
    case AutoStrategy::BlocksAndCuts: return "blocks+cuts";
    case AutoStrategy::Three: return "three";
    case AutoStrategy::LogN: return "logn";
    case AutoStrategy::CycleSplit: return "cycle-split";
  }
  return "?";
}

namespace detail {

inline Packing relabel_packing(const Packing& pack,
                               const std::vector<int>& to_original, int n) {
  Packing out;
  out.n = n;
  for (const Matching& M : pack.matchings) {
    Matching R;
    R.n = n;
    for (const Edge& e : M.edges)
      R.edges.emplace_back(to_original[static_cast<std::size_t>(e.a)],
                           to_original[static_cast<std::size_t>(e.b)]);
    out.matchings.push_back(std::move(R));
  }
  return out;
}

/// Blocks of size n/2^(i-1) packed three-ways, then merged pairwise with one
/// crossing matching per merge level: i + 2 matchings in total.
inline Packing pack_blocks_and_cuts(const PointSet& P, int i) {
  const int n = P.size();
  const ShearedPoints sheared = ensure_distinct_x(P);
  const PointSet& Q = sheared.pts;
  const std::vector<int> order = sorted_by_x(Q, all_indices(n));
  const int blocks = 1 << (i - 1);
  const int block_size = n / blocks;
  auto rec = [&](auto&& self, int lo, int hi) -> std::vector<EdgeList> {
    if (hi - lo == block_size) {
      const auto ms = three_matchings_subset(
          Q, std::vector<int>(order.begin() + lo, order.begin() + hi), nullptr);
      return {ms[0], ms[1], ms[2]};
    }
    const int mid = lo + (hi - lo) / 2;
    std::vector<EdgeList> left = self(self, lo, mid);
    const std::vector<EdgeList> right = self(self, mid, hi);
    for (std::size_t j = 0; j < left.size(); ++j)
      left[j].insert(left[j].end(), right[j].begin(), right[j].end());
    left.push_back(cut_rb_matching(
        Q, std::vector<int>(order.begin() + lo, order.begin() + mid),
        std::vector<int>(order.begin() + mid, order.begin() + hi)));
    return left;
  };
  Packing pack;
  pack.n = n;
  for (EdgeList& e : rec(rec, 0, n)) pack.matchings.emplace_back(n, std::move(e));
  return pack;
}

}  // namespace detail

/// Dispatch: recognizes convex and wheel layouts, otherwise picks the
/// general-position construction with the best guarantee for this n.
inline Packing pack_auto(const PointSet& P, AutoStrategy* used = nullptr) {
  const int n = P.size();
  detail::require_even(n, 2, "pack_auto");
  auto done = [&](AutoStrategy s, Packing pack) {
    if (used != nullptr) *used = s;
    return pack;
  };
  if (n == 2)
    return done(AutoStrategy::Single, Packing{2, {Matching(2, {Edge(0, 1)})}});
  const std::vector<int> hull = convex_hull(P);
  const int h = static_cast<int>(hull.size());
  if (h == n) {
    PointSet Q;
    for (int v : hull) Q.points.push_back(P[v]);
    return done(AutoStrategy::Convex,
                detail::relabel_packing(pack_convex(Q), hull, n));
  }
  if (h == n - 1) {
    std::vector<char> on_hull(static_cast<std::size_t>(n), 0);
    for (int v : hull) on_hull[static_cast<std::size_t>(v)] = 1;
    std::vector<int> perm = hull;
    for (int v = 0; v < n; ++v)
      if (!on_hull[static_cast<std::size_t>(v)]) perm.push_back(v);
    PointSet Q;
    for (int v : perm) Q.points.push_back(P[v]);
    try {
      return done(AutoStrategy::Wheel,
                  detail::relabel_packing(pack_wheel(Q), perm, n));
    } catch (const std::invalid_argument&) {
      // not an actual wheel geometry; fall through to the general case
    }
  }
  struct Option {
    AutoStrategy strategy;
    int guarantee;
    int priority;  // tie-break, larger preferred
  };
  std::vector<Option> options;
  if (n >= 4) options.push_back({AutoStrategy::CycleSplit, 2, 0});
  if (n >= 4)
    options.push_back(
        {AutoStrategy::LogN, build_pack_tree(n).min_leaf_depth, 1});
  if ((n & (n - 1)) == 0) {
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    options.push_back({AutoStrategy::PowerOfTwo, log2n, 2});
  } else {
    int i = 0;
    while (n % (1 << (i + 1)) == 0 && n / (1 << (i + 1)) >= 4) ++i;
    if (i >= 1 && n % (1 << i) == 0 && n / (1 << i) >= 4)
      options.push_back({AutoStrategy::BlocksAndCuts, i + 2, 2});
  }
  if (n >= 8) options.push_back({AutoStrategy::Three, 3, 3});
  const auto best =
      std::max_element(options.begin(), options.end(),
                       [](const Option& a, const Option& b) {
                         if (a.guarantee != b.guarantee)
                           return a.guarantee < b.guarantee;
                         return a.priority < b.priority;
                       });
  switch (best->strategy) {
    case AutoStrategy::PowerOfTwo:
      return done(AutoStrategy::PowerOfTwo, pack_power_of_two(P));
    case AutoStrategy::BlocksAndCuts: {
      int i = 0;
      while (n % (1 << (i + 1)) == 0 && n / (1 << (i + 1)) >= 4) ++i;
      return done(AutoStrategy::BlocksAndCuts, detail::pack_blocks_and_cuts(P, i));
    }
    case AutoStrategy::Three:
      return done(AutoStrategy::Three, pack_three(P));
    case AutoStrategy::LogN:
      return done(AutoStrategy::LogN, pack_logn(P));
    default: {
      const Cycle cyc = plane_hamiltonian_cycle(P);
      auto [m1, m2] = split_cycle(n, cyc);
      return done(AutoStrategy::CycleSplit,
                  Packing{n, {std::move(m1), std::move(m2)}});
    }
  }
}

}  // namespace matchpack
