#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchpack/geom.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

inline bool is_plane_edges(const PointSet& P, const EdgeList& edges) {
  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (segments_cross(P, edges[i], edges[j])) return false;
  return true;
}

/// Exact planarity of a perfect matching; throws if M is not perfect.
inline bool is_plane_matching(const PointSet& P, const Matching& M) {
  if (M.n != P.size() || !M.is_perfect())
    throw std::invalid_argument("is_plane_matching: matching not perfect");
  return is_plane_edges(P, M.edges);
}

struct VerifyReport {
  bool valid = true;
  std::vector<std::string> problems;

  void flag(std::string msg) {
    valid = false;
    problems.push_back(std::move(msg));
  }
};

/// Checks each matching for perfectness, optional exact planarity, pairwise
/// edge-disjointness, and optionally pairwise non-crossing. All findings are
/// reported; nothing throws.
inline VerifyReport verify_packing(const PointSet& P, const Packing& pack,
                                   bool require_plane = true,
                                   bool require_noncrossing = false) {
  VerifyReport rep;
  const int n = P.size();
  auto name = [](int i) { return "matching " + std::to_string(i); };
  auto etxt = [](const Edge& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
  };
  if (pack.n != n)
    rep.flag("packing declares n=" + std::to_string(pack.n) +
             " but point set has " + std::to_string(n));
  for (int mi = 0; mi < pack.size(); ++mi) {
    const Matching& M = pack.matchings[mi];
    if (M.n != n || !M.is_perfect()) {
      rep.flag(name(mi) + " is not a perfect matching on " +
               std::to_string(n) + " points");
      continue;
    }
    if (require_plane) {
      const int m = static_cast<int>(M.edges.size());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (segments_cross(P, M.edges[i], M.edges[j]))
            rep.flag(name(mi) + ": edges " + etxt(M.edges[i]) + " and " +
                     etxt(M.edges[j]) + " cross");
    }
  }
  std::map<Edge, int> owner;
  for (int mi = 0; mi < pack.size(); ++mi)
    for (const Edge& e : pack.matchings[mi].edges) {
      auto [it, fresh] = owner.emplace(e, mi);
      if (!fresh)
        rep.flag("edge " + etxt(e) + " shared by " + name(it->second) +
                 " and " + name(mi));
    }
  if (require_noncrossing) {
    for (int a = 0; a < pack.size(); ++a)
      for (int b = a + 1; b < pack.size(); ++b)
        for (const Edge& e : pack.matchings[a].edges)
          for (const Edge& f : pack.matchings[b].edges)
            if (segments_cross(P, e, f))
              rep.flag("edge " + etxt(e) + " of " + name(a) + " crosses " +
                       etxt(f) + " of " + name(b));
  }
  return rep;
}

inline double cycle_length(const PointSet& P, const Cycle& c) {
  double total = 0;
  const int m = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i) total += dist(P[c[i]], P[c[(i + 1) % m]]);
  return total;
}

/// Repeated 2-opt on crossing edge pairs until the cycle is plane (exact
/// predicate). Every move strictly shortens the tour, which bounds the loop.
/// Returns the number of moves.
inline int uncross_cycle(const PointSet& P, Cycle& c) {
  const int m = static_cast<int>(c.size());
  if (m < 4) return 0;
  int moves = 0;
  const long long guard = 64LL * m * m + 4096;
  double total = cycle_length(P, c);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m && !changed; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const Edge ei(c[i], c[(i + 1) % m]);
        const Edge ej(c[j], c[(j + 1) % m]);
        if (ei.shares_vertex(ej)) continue;
        if (!segments_cross(P, ei, ej)) continue;
        std::reverse(c.begin() + i + 1, c.begin() + j + 1);
        ++moves;
        const double now = cycle_length(P, c);
        if (now > total + 1e-6 * (1.0 + std::abs(total)))
          throw std::logic_error("uncross_cycle: tour length increased");
        total = now;
        changed = true;
        break;
      }
    }
    if (moves > guard)
      throw std::logic_error("uncross_cycle: move guard exceeded");
  }
  return moves;
}

/// Plane Hamiltonian cycle on a subset: radial order about the bottom-most
/// point (already simple in general position), then defensive uncrossing.
inline Cycle plane_hamiltonian_cycle_subset(const PointSet& P,
                                            std::vector<int> idx) {
  if (idx.size() < 3)
    throw std::invalid_argument("plane_hamiltonian_cycle: need >= 3 points");
  auto lowest = std::min_element(idx.begin(), idx.end(), [&](int a, int b) {
    if (P[a].y != P[b].y) return P[a].y < P[b].y;
    return P[a].x < P[b].x;
  });
  std::iter_swap(idx.begin(), lowest);
  const int pivot = idx[0];
  std::sort(idx.begin() + 1, idx.end(), [&](int a, int b) {
    return orient(P[pivot], P[a], P[b]) > 0;
  });
  uncross_cycle(P, idx);
  return idx;
}

inline Cycle plane_hamiltonian_cycle(const PointSet& P) {
  std::vector<int> idx(static_cast<std::size_t>(P.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return plane_hamiltonian_cycle_subset(P, std::move(idx));
}

/// Alternate edges of an even cycle.
inline std::pair<EdgeList, EdgeList> split_cycle_edges(const Cycle& c) {
  const int m = static_cast<int>(c.size());
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("split_cycle: cycle length must be even");
  EdgeList even, odd;
  for (int i = 0; i < m; ++i)
    (i % 2 == 0 ? even : odd).emplace_back(c[i], c[(i + 1) % m]);
  return {even, odd};
}

/// Splits a Hamiltonian cycle over all n points into its two matchings.
inline std::pair<Matching, Matching> split_cycle(int n, const Cycle& c) {
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("split_cycle: cycle does not span all points");
  auto [even, odd] = split_cycle_edges(c);
  Matching m1(n, std::move(even));
  Matching m2(n, std::move(odd));
  if (!m1.is_perfect() || !m2.is_perfect())
    throw std::invalid_argument("split_cycle: not a simple spanning cycle");
  return {std::move(m1), std::move(m2)};
}

/// Union of two edge-disjoint perfect matchings: alternating cycles, all of
/// even length >= 4.
inline CycleDecomposition union_cycles(const Matching& m1, const Matching& m2) {
  if (m1.n != m2.n || !m1.is_perfect() || !m2.is_perfect())
    throw std::invalid_argument("union_cycles: need perfect matchings");
  const int n = m1.n;
  std::vector<int> p1(static_cast<std::size_t>(n)),
      p2(static_cast<std::size_t>(n));
  for (const Edge& e : m1.edges) p1[e.a] = e.b, p1[e.b] = e.a;
  for (const Edge& e : m2.edges) p2[e.a] = e.b, p2[e.b] = e.a;
  for (const Edge& e : m1.edges)
    if (p2[e.a] == e.b)
      throw std::invalid_argument("union_cycles: matchings share edge (" +
                                  std::to_string(e.a) + "," +
                                  std::to_string(e.b) + ")");
  CycleDecomposition dec;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    Cycle c;
    int cur = v;
    bool use1 = true;
    do {
      c.push_back(cur);
      seen[cur] = 1;
      cur = use1 ? p1[cur] : p2[cur];
      use1 = !use1;
    } while (cur != v);
    if (c.size() < 4 || c.size() % 2 != 0)
      throw std::logic_error("union_cycles: malformed alternating cycle");
    dec.cycles.push_back(std::move(c));
  }
  return dec;
}

}  // namespace matchpack
