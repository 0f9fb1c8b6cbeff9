#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "matchpack/geom.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

inline double edges_length(const PointSet& P, const EdgeList& edges) {
  double total = 0;
  for (const Edge& e : edges) total += dist(P[e.a], P[e.b]);
  return total;
}

/// Crossing-swap repair until the matching is plane (exact predicate).
/// With a color map, only reconnections that keep every edge bichromatic
/// are taken; at least one of the two reconnections of a crossing pair
/// always qualifies, and both strictly shorten the matching, so the loop
/// terminates. Returns the number of swaps.
inline int uncross_matching(const PointSet& P, EdgeList& edges,
                            const std::vector<int>* color = nullptr) {
  const int m = static_cast<int>(edges.size());
  if (m < 2) return 0;
  auto mono = [&](int u, int v) {
    return color != nullptr && (*color)[u] == (*color)[v];
  };
  int swaps = 0;
  const long long guard = 64LL * m * m + 4096;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m && !changed; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (!segments_cross(P, edges[i], edges[j])) continue;
        const int a = edges[i].a, b = edges[i].b;
        const int c = edges[j].a, d = edges[j].b;
        const bool ac_ok = !mono(a, c) && !mono(b, d);
        const bool ad_ok = !mono(a, d) && !mono(b, c);
        if (!ac_ok && !ad_ok)
          throw std::logic_error("uncross_matching: no valid reconnection");
        bool use_ac = ac_ok;
        if (ac_ok && ad_ok) {
          const double len_ac = dist(P[a], P[c]) + dist(P[b], P[d]);
          const double len_ad = dist(P[a], P[d]) + dist(P[b], P[c]);
          use_ac = len_ac <= len_ad;
        }
        if (use_ac) {
          edges[i] = Edge(a, c);
          edges[j] = Edge(b, d);
        } else {
          edges[i] = Edge(a, d);
          edges[j] = Edge(b, c);
        }
        ++swaps;
        changed = true;
        break;
      }
    }
    if (swaps > guard)
      throw std::logic_error("uncross_matching: swap guard exceeded");
  }
  return swaps;
}

/// Min-cost assignment by shortest augmenting paths with potentials, O(k^3).
inline std::vector<int> solve_assignment(
    const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) match[static_cast<std::size_t>(p[j] - 1)] = j - 1;
  return match;
}

struct RbResult {
  EdgeList edges;          // construction order
  bool exact_min = false;  // produced by the exact assignment path
  bool repaired = false;   // planarity needed crossing-swap repair
};

/// A plane perfect red-blue matching. Up to `exact_threshold` points per
/// side this is the minimum-total-length RB matching (floating weights,
/// planarity asserted exactly); beyond that a rank-paired matching is
/// repaired to planarity instead.
inline RbResult min_rb_matching(const PointSet& P, const std::vector<int>& red,
                                const std::vector<int>& blue,
                                int exact_threshold = 16) {
  const int k = static_cast<int>(red.size());
  if (k == 0 || k != static_cast<int>(blue.size()))
    throw std::invalid_argument("min_rb_matching: |R| and |B| must match");
  std::vector<int> rb_color(static_cast<std::size_t>(P.size()), 0);
  for (int b : blue) rb_color[static_cast<std::size_t>(b)] = 1;
  RbResult res;
  if (k <= exact_threshold) {
    std::vector<std::vector<double>> cost(
        static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) cost[i][j] = dist(P[red[i]], P[blue[j]]);
    const std::vector<int> match = solve_assignment(cost);
    for (int i = 0; i < k; ++i) res.edges.emplace_back(red[i], blue[match[i]]);
    res.exact_min = true;
  } else {
    auto by_y = [&](int a, int b) {
      if (P[a].y != P[b].y) return P[a].y < P[b].y;
      return P[a].x < P[b].x;
    };
    std::vector<int> rs = red, bs = blue;
    std::sort(rs.begin(), rs.end(), by_y);
    std::sort(bs.begin(), bs.end(), by_y);
    for (int i = 0; i < k; ++i) res.edges.emplace_back(rs[i], bs[i]);
  }
  res.repaired = uncross_matching(P, res.edges, &rb_color) > 0;
  return res;
}

/// Plane RB matching by recursive ham-sandwich bisection. With odd halves
/// the two on-line points (one of each color) are matched together.
inline EdgeList cut_rb_matching(const PointSet& P, std::vector<int> red,
                                std::vector<int> blue, int depth = 0,
                                int* max_depth = nullptr) {
  if (red.size() != blue.size())
    throw std::invalid_argument("cut_rb_matching: |R| and |B| must match");
  if (max_depth != nullptr) *max_depth = std::max(*max_depth, depth);
  if (red.empty()) return {};
  if (red.size() == 1) return {Edge(red[0], blue[0])};
  const Line cut = ham_sandwich_cut(P, red, blue);
  std::vector<int> rl, rr, bl, br;
  int on_red = -1, on_blue = -1;
  for (int i : red) {
    const int s = cut.side(P[i]);
    if (s > 0)
      rl.push_back(i);
    else if (s < 0)
      rr.push_back(i);
    else
      on_red = i;
  }
  for (int i : blue) {
    const int s = cut.side(P[i]);
    if (s > 0)
      bl.push_back(i);
    else if (s < 0)
      br.push_back(i);
    else
      on_blue = i;
  }
  if (rl.size() != bl.size() || rr.size() != br.size() ||
      (on_red >= 0) != (on_blue >= 0))
    throw std::logic_error("cut_rb_matching: cut does not balance colors");
  EdgeList edges = cut_rb_matching(P, std::move(rl), std::move(bl), depth + 1,
                                   max_depth);
  EdgeList right = cut_rb_matching(P, std::move(rr), std::move(br), depth + 1,
                                   max_depth);
  edges.insert(edges.end(), right.begin(), right.end());
  if (on_red >= 0) edges.emplace_back(on_red, on_blue);
  return edges;
}

/// Plane RB matching for vertically separated sets: repeatedly match the
/// upper tangent pair and discard it. Edges are returned in selection
/// order; everything not yet matched lies strictly below each accepted
/// edge's supporting line.
inline EdgeList tangent_rb_matching(const PointSet& P, std::vector<int> red,
                                    std::vector<int> blue) {
  if (red.size() != blue.size())
    throw std::invalid_argument("tangent_rb_matching: |R| and |B| must match");
  if (red.empty()) return {};
  bool red_left = false;
  if (!detail::vertical_separation(P, red, blue, red_left))
    throw std::invalid_argument(
        "tangent_rb_matching: sets not vertically separated");
  EdgeList edges;
  while (!red.empty()) {
    const auto [r, b] = upper_tangent(P, red, blue);
    edges.emplace_back(r, b);
    red.erase(std::find(red.begin(), red.end(), r));
    blue.erase(std::find(blue.begin(), blue.end(), b));
  }
  return edges;
}

namespace detail {

inline bool plane_rb_dfs(const PointSet& P, const std::vector<int>& reds,
                         const std::vector<int>& blues, std::size_t at,
                         unsigned long long used_blue, EdgeList& chosen,
                         const EdgeList& forbidden) {
  if (at == reds.size()) return true;
  for (std::size_t j = 0; j < blues.size(); ++j) {
    if (used_blue & (1ull << j)) continue;
    const Edge e(reds[at], blues[j]);
    if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end())
      continue;
    bool ok = true;
    for (const Edge& f : chosen)
      if (segments_cross(P, e, f)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(e);
    if (plane_rb_dfs(P, reds, blues, at + 1, used_blue | (1ull << j), chosen,
                     forbidden))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Tangent peel that must not use the reserved edges. The peel can strand a
/// reserved pair as its final match (everything else is already matched), so
/// on a clash the last w edges are re-matched by exact search; all points of
/// those edges lie strictly below every kept supporting line, which keeps
/// any re-matching plane against the kept prefix.
inline EdgeList tangent_rb_matching_avoiding(const PointSet& P,
                                             const std::vector<int>& red,
                                             const std::vector<int>& blue,
                                             const EdgeList& forbidden) {
  EdgeList peel = tangent_rb_matching(P, red, blue);
  bool clash = false;
  for (const Edge& e : peel)
    if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end())
      clash = true;
  if (!clash) return peel;
  std::vector<char> is_red(static_cast<std::size_t>(P.size()), 0);
  for (int r : red) is_red[static_cast<std::size_t>(r)] = 1;
  const int m = static_cast<int>(peel.size());
  for (int w = 2; w <= std::min(m, 64); ++w) {
    EdgeList kept(peel.begin(), peel.end() - w);
    std::vector<int> reds, blues;
    for (int t = m - w; t < m; ++t)
      for (int v : {peel[static_cast<std::size_t>(t)].a,
                    peel[static_cast<std::size_t>(t)].b})
        (is_red[static_cast<std::size_t>(v)] ? reds : blues).push_back(v);
    EdgeList window;
    if (detail::plane_rb_dfs(P, reds, blues, 0, 0, window, forbidden)) {
      kept.insert(kept.end(), window.begin(), window.end());
      return kept;
    }
  }
  throw std::logic_error(
      "tangent_rb_matching_avoiding: no plane matching avoids the reserved "
      "edges");
}

struct ColoredResult {
  EdgeList edges;
  bool exact_min = false;
  bool repaired = false;
};

/// A plane perfect matching with no monochromatic edge. Exact minimum total
/// length for n <= exact_threshold via subset DP; beyond that, a greedy
/// largest-two-classes matching repaired to planarity. Infeasible (some
/// color class larger than n/2) throws.
inline ColoredResult min_colored_matching(const PointSet& P,
                                          const std::vector<int>& color,
                                          int exact_threshold = 20) {
  const int n = P.size();
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("min_colored_matching: n must be even");
  if (static_cast<int>(color.size()) != n)
    throw std::invalid_argument("min_colored_matching: color size mismatch");
  int classes = 0;
  for (int c : color) classes = std::max(classes, c + 1);
  std::vector<int> count(static_cast<std::size_t>(classes), 0);
  for (int c : color) {
    if (c < 0) throw std::invalid_argument("min_colored_matching: bad color");
    ++count[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < classes; ++c)
    if (count[static_cast<std::size_t>(c)] > n / 2)
      throw std::invalid_argument(
          "min_colored_matching: color class " + std::to_string(c) +
          " exceeds half the points; no colored matching exists");
  ColoredResult res;
  if (n <= exact_threshold) {
    const int full = (1 << n) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(static_cast<std::size_t>(full) + 1, inf);
    // last pair (i, j) taken into each state, i*32+j, for reconstruction
    std::vector<std::int16_t> choice(static_cast<std::size_t>(full) + 1, -1);
    dp[0] = 0;
    for (int mask = 0; mask < full; ++mask) {
      if (dp[static_cast<std::size_t>(mask)] == inf) continue;
      int i = 0;
      while (mask & (1 << i)) ++i;
      for (int j = i + 1; j < n; ++j) {
        if ((mask & (1 << j)) || color[i] == color[j]) continue;
        const int next = mask | (1 << i) | (1 << j);
        const double cand =
            dp[static_cast<std::size_t>(mask)] + dist(P[i], P[j]);
        if (cand < dp[static_cast<std::size_t>(next)]) {
          dp[static_cast<std::size_t>(next)] = cand;
          choice[static_cast<std::size_t>(next)] =
              static_cast<std::int16_t>(i * 32 + j);
        }
      }
    }
    if (dp[static_cast<std::size_t>(full)] == inf)
      throw std::logic_error("min_colored_matching: DP found no matching");
    int mask = full;
    while (mask != 0) {
      const int packed = choice[static_cast<std::size_t>(mask)];
      if (packed < 0)
        throw std::logic_error("min_colored_matching: reconstruction failed");
      const int i = packed / 32;
      const int j = packed % 32;
      res.edges.emplace_back(i, j);
      mask &= ~(1 << i) & ~(1 << j);
    }
    std::reverse(res.edges.begin(), res.edges.end());
    res.exact_min = true;
  } else {
    // pair the two largest remaining classes; keeps every class <= half
    std::vector<std::vector<int>> members(static_cast<std::size_t>(classes));
    for (int i = n - 1; i >= 0; --i)
      members[static_cast<std::size_t>(color[i])].push_back(i);
    for (int step = 0; step < n / 2; ++step) {
      int c1 = -1, c2 = -1;
      for (int c = 0; c < classes; ++c) {
        const int sz = static_cast<int>(members[c].size());
        if (sz == 0) continue;
        if (c1 < 0 || sz > static_cast<int>(members[c1].size()))
          c2 = c1, c1 = c;
        else if (c2 < 0 || sz > static_cast<int>(members[c2].size()))
          c2 = c;
      }
      if (c2 < 0)
        throw std::logic_error("min_colored_matching: greedy pairing stuck");
      res.edges.emplace_back(members[c1].back(), members[c2].back());
      members[c1].pop_back();
      members[c2].pop_back();
    }
  }
  res.repaired = uncross_matching(P, res.edges, &color) > 0;
  return res;
}

}  // namespace matchpack
