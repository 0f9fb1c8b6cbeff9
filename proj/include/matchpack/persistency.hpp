#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "matchpack/bichromatic.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

/// Round-robin 1-factorization of K_n: color i is the spoke (i, n-1) plus
/// all pairs symmetric about i on the cycle 0..n-2. n-1 matchings
/// partitioning every edge.
inline std::vector<Matching> one_factorize_kn(int n) {
  detail::require_even(n, 2, "one_factorize_kn");
  const int m = n - 1;
  std::vector<Matching> out;
  for (int i = 0; i < m; ++i) {
    Matching M;
    M.n = n;
    M.edges.emplace_back(i, n - 1);
    for (int j = 1; j <= n / 2 - 1; ++j)
      M.edges.emplace_back(((i - j) % m + m) % m, (i + j) % m);
    if (!M.is_perfect())
      throw std::logic_error("one_factorize_kn: bad color class");
    out.push_back(std::move(M));
  }
  return out;
}

/// For n = 2 (mod 4): the n/2 perfect matchings partitioning the complete
/// bipartite graph between {0..n/2-1} and {n/2..n-1}. Removing them from
/// K_n leaves two odd cliques, which kills every perfect matching.
inline std::vector<Matching> bipartite_kill_set(int n) {
  if (n < 2 || n % 4 != 2)
    throw std::invalid_argument(
        "bipartite_kill_set: n must be 2 mod 4, got " + std::to_string(n));
  const int h = n / 2;
  std::vector<Matching> out;
  for (int t = 0; t < h; ++t) {
    Matching M;
    M.n = n;
    for (int i = 0; i < h; ++i) M.edges.emplace_back(i, h + (i + t) % h);
    out.push_back(std::move(M));
  }
  return out;
}

/// Simple undirected graph on at most 24 vertices, adjacency as bitmasks.
struct AbstractGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  static AbstractGraph complete(int n) {
    if (n < 0 || n > 24)
      throw std::invalid_argument("AbstractGraph: supports up to 24 vertices");
    AbstractGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) g.adj[i] |= (1u << j);
    return g;
  }
  bool has_edge(int i, int j) const { return (adj[i] >> j) & 1u; }
  void remove_edge(int i, int j) {
    adj[i] &= ~(1u << j);
    adj[j] &= ~(1u << i);
  }
  void remove_matching(const Matching& M) {
    for (const Edge& e : M.edges) remove_edge(e.a, e.b);
  }
  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::uint32_t left = n == 32 ? ~0u : ((1u << n) - 1);
    while (left) {
      const int s = __builtin_ctz(left);
      std::uint32_t comp = 1u << s, frontier = 1u << s;
      while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
          const int v = __builtin_ctz(f);
          f &= f - 1;
          next |= adj[v] & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if ((comp >> v) & 1u) verts.push_back(v);
      comps.push_back(std::move(verts));
      left &= ~comp;
    }
    return comps;
  }
};

/// Exact perfect-matching decision by memoized search on the vertex mask.
inline bool has_perfect_matching(const AbstractGraph& g) {
  if (g.n % 2 != 0) return false;
  std::unordered_map<std::uint32_t, bool> memo;
  auto rec = [&](auto&& self, std::uint32_t rem) -> bool {
    if (rem == 0) return true;
    const auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    const int i = __builtin_ctz(rem);
    std::uint32_t cand = g.adj[i] & rem & ~(1u << i);
    bool ok = false;
    while (cand && !ok) {
      const int j = __builtin_ctz(cand);
      cand &= cand - 1;
      ok = self(self, rem & ~(1u << i) & ~(1u << j));
    }
    memo.emplace(rem, ok);
    return ok;
  };
  const std::uint32_t full = g.n == 32 ? ~0u : ((1u << g.n) - 1);
  return rec(rec, full);
}

/// A plane perfect matching edge-disjoint from M: color both endpoints of
/// every M-edge alike and take a plane colored matching, which by
/// construction avoids every monochromatic pair.
inline Matching survive_plane_matching_removal(const PointSet& P,
                                               const Matching& M) {
  if (M.n != P.size() || !M.is_perfect() || !is_plane_edges(P, M.edges))
    throw std::invalid_argument(
        "survive_plane_matching_removal: M must be a plane perfect matching");
  std::vector<int> color(static_cast<std::size_t>(P.size()), -1);
  for (int c = 0; c < static_cast<int>(M.edges.size()); ++c) {
    color[static_cast<std::size_t>(M.edges[c].a)] = c;
    color[static_cast<std::size_t>(M.edges[c].b)] = c;
  }
  Matching out(P.size(), min_colored_matching(P, color).edges);
  for (const Edge& e : out.edges)
    if (M.contains(e))
      throw std::logic_error("survive_plane_matching_removal: edge reused");
  return out;
}

/// Third matching for the nested-triangle family: one free edge per
/// triangle, completed pairwise over consecutive triangles with the local
/// swap cascade. Output is plane, perfect, and edge-disjoint from M1 ∪ M2.
inline Matching nested_triangle_third_matching(const PointSet& P,
                                               const Matching& m1,
                                               const Matching& m2) {
  const auto fam = P.meta.find("family");
  if (fam == P.meta.end() || fam->second != "nested-triangles")
    throw std::invalid_argument(
        "nested_triangle_third_matching: point set lacks triangle metadata");
  const int n = P.size();
  const int k = n / 3;
  if (k % 2 != 0)
    throw std::invalid_argument("nested_triangle_third_matching: odd k");
  if (m1.n != n || m2.n != n || !m1.is_perfect() || !m2.is_perfect() ||
      !is_plane_edges(P, m1.edges) || !is_plane_edges(P, m2.edges))
    throw std::invalid_argument(
        "nested_triangle_third_matching: need plane perfect matchings");
  std::vector<char> in_g(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(n),
                         0);
  auto set_g = [&](const Edge& e) {
    in_g[static_cast<std::size_t>(e.a) * n + e.b] = 1;
    in_g[static_cast<std::size_t>(e.b) * n + e.a] = 1;
  };
  for (const Edge& e : m1.edges) set_g(e);
  for (const Edge& e : m2.edges) {
    if (in_g[static_cast<std::size_t>(e.a) * n + e.b])
      throw std::invalid_argument(
          "nested_triangle_third_matching: matchings share an edge");
    set_g(e);
  }
  auto g = [&](int u, int v) {
    return in_g[static_cast<std::size_t>(u) * n + v] != 0;
  };
  // one non-G edge in each triangle; a triangle fully in G would be an odd
  // cycle in the union of two edge-disjoint perfect matchings
  std::vector<Edge> tri_edge(static_cast<std::size_t>(k), Edge(0, 1));
  std::vector<int> leftover(static_cast<std::size_t>(k), -1);
  for (int t = 0; t < k; ++t) {
    const int a = 3 * t, b = 3 * t + 1, c = 3 * t + 2;
    if (!g(a, b))
      tri_edge[t] = Edge(a, b), leftover[t] = c;
    else if (!g(b, c))
      tri_edge[t] = Edge(b, c), leftover[t] = a;
    else if (!g(a, c))
      tri_edge[t] = Edge(a, c), leftover[t] = b;
    else
      throw std::logic_error(
          "nested_triangle_third_matching: triangle fully covered");
  }
  Matching m3;
  m3.n = n;
  for (int t = 0; t < k; t += 2) {
    const int x = leftover[t];
    int y = leftover[t + 1];
    Edge inner = tri_edge[t + 1];
    int cross_to = -1;
    if (!g(x, y)) {
      cross_to = y;
    } else {
      // swing the inner edge around so y pairs into it
      const int z = !g(y, inner.a) ? inner.a : inner.b;
      if (g(y, z))
        throw std::logic_error(
            "nested_triangle_third_matching: no free edge at pivot");
      const int yp = inner.other(z);
      if (!g(x, yp)) {
        inner = Edge(y, z);
        cross_to = yp;
      } else {
        // x saturated by (x,y) and (x,yp); (y,yp) and (x,z) must be free
        if (g(y, yp) || g(x, z))
          throw std::logic_error(
              "nested_triangle_third_matching: cascade invariant violated");
        inner = Edge(y, yp);
        cross_to = z;
      }
    }
    m3.edges.push_back(tri_edge[t]);
    m3.edges.push_back(inner);
    m3.edges.emplace_back(x, cross_to);
  }
  if (!m3.is_perfect())
    throw std::logic_error("nested_triangle_third_matching: not perfect");
  for (const Edge& e : m3.edges)
    if (g(e.a, e.b))
      throw std::logic_error("nested_triangle_third_matching: edge collision");
  if (!is_plane_edges(P, m3.edges))
    throw std::logic_error("nested_triangle_third_matching: output crosses");
  return m3;
}

}  // namespace matchpack
