#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchpack/types.hpp"

namespace matchpack {

/// Sign of the cross product (q-p) x (r-p), computed exactly.
inline int orient(const Point& p, const Point& q, const Point& r) {
  if (p.fast && q.fast && r.fast) {
    using I = __int128;
    const I v = I(q.xi - p.xi) * I(r.yi - p.yi) -
                I(q.yi - p.yi) * I(r.xi - p.xi);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  const Rat v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign_of(v);
}

/// Proper crossing of the open segments ab and cd. Segments sharing an
/// endpoint or merely touching do not cross.
inline bool segments_cross(const Point& a, const Point& b, const Point& c,
                           const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o3 == 0 || o4 == 0) return false;
  return o3 != o4;
}

inline bool segments_cross(const PointSet& P, const Edge& e, const Edge& f) {
  if (e.shares_vertex(f)) return false;
  return segments_cross(P[e.a], P[e.b], P[f.a], P[f.b]);
}

/// First collinear triple found, if any. O(n^3).
inline std::optional<std::array<int, 3>> find_collinear_triple(
    const PointSet& P) {
  const int n = P.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (P[i] == P[j]) return std::array<int, 3>{i, j, j};
      for (int k = j + 1; k < n; ++k)
        if (orient(P[i], P[j], P[k]) == 0) return std::array<int, 3>{i, j, k};
    }
  return std::nullopt;
}

inline bool in_general_position(const PointSet& P) {
  return !find_collinear_triple(P).has_value();
}

/// Convex hull of a subset of P, counterclockwise. Assumes general position.
inline std::vector<int> convex_hull_subset(const PointSet& P,
                                           std::vector<int> idx) {
  if (idx.size() < 3)
    throw std::invalid_argument("convex_hull: need at least 3 points");
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return coord_less(P[a], P[b]); });
  const int m = static_cast<int>(idx.size());
  std::vector<int> hull(static_cast<std::size_t>(2 * m));
  int k = 0;
  for (int i = 0; i < m; ++i) {  // lower chain
    while (k >= 2 && orient(P[hull[k - 2]], P[hull[k - 1]], P[idx[i]]) <= 0)
      --k;
    hull[k++] = idx[i];
  }
  for (int i = m - 2, lo = k + 1; i >= 0; --i) {  // upper chain
    while (k >= lo && orient(P[hull[k - 2]], P[hull[k - 1]], P[idx[i]]) <= 0)
      --k;
    hull[k++] = idx[i];
  }
  hull.resize(static_cast<std::size_t>(k - 1));
  return hull;
}

inline std::vector<int> convex_hull(const PointSet& P) {
  std::vector<int> idx(static_cast<std::size_t>(P.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return convex_hull_subset(P, std::move(idx));
}

/// True if q lies strictly inside the ccw convex polygon P[hull[..]].
inline bool strictly_inside_hull(const PointSet& P,
                                 const std::vector<int>& hull,
                                 const Point& q) {
  const int h = static_cast<int>(hull.size());
  for (int i = 0; i < h; ++i)
    if (orient(P[hull[i]], P[hull[(i + 1) % h]], q) <= 0) return false;
  return true;
}

namespace detail {

inline void require_even(int n, int lo, const char* who) {
  if (n < lo || n % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": n must be even and >= " +
                                std::to_string(lo) + ", got " +
                                std::to_string(n));
}

/// Requires disjoint x-ranges. Returns true with red_left set accordingly,
/// or false if the sets interleave in x.
inline bool vertical_separation(const PointSet& P, const std::vector<int>& red,
                                const std::vector<int>& blue, bool& red_left) {
  if (red.empty() || blue.empty())
    throw std::invalid_argument("vertical_separation: empty side");
  const Point* rmin = &P[red[0]];
  const Point* rmax = rmin;
  for (int i : red) {
    if (P[i].x < rmin->x) rmin = &P[i];
    if (P[i].x > rmax->x) rmax = &P[i];
  }
  const Point* bmin = &P[blue[0]];
  const Point* bmax = bmin;
  for (int i : blue) {
    if (P[i].x < bmin->x) bmin = &P[i];
    if (P[i].x > bmax->x) bmax = &P[i];
  }
  if (rmax->x < bmin->x) {
    red_left = true;
    return true;
  }
  if (bmax->x < rmin->x) {
    red_left = false;
    return true;
  }
  return false;
}

}  // namespace detail

/// Upper tangent (r, b) of CH(red) and CH(blue): every other point of
/// red ∪ blue lies strictly below the line through r and b. The two sets
/// must be separated by a vertical line.
inline std::pair<int, int> upper_tangent(const PointSet& P,
                                         const std::vector<int>& red,
                                         const std::vector<int>& blue) {
  bool red_left = false;
  if (!detail::vertical_separation(P, red, blue, red_left))
    throw std::invalid_argument("upper_tangent: sets not vertically separated");
  for (int r : red)
    for (int b : blue) {
      const Point& l = red_left ? P[r] : P[b];
      const Point& g = red_left ? P[b] : P[r];
      bool ok = true;
      for (int q : red) {
        if (q == r) continue;
        if (orient(l, g, P[q]) >= 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int q : blue) {
        if (q == b) continue;
        if (orient(l, g, P[q]) >= 0) {
          ok = false;
          break;
        }
      }
      if (ok) return {r, b};
    }
  throw std::logic_error("upper_tangent: no tangent found");
}

/// The two crossing (inner) tangents between vertically separated sets,
/// each as a (red index, blue index) pair sorted deterministically. For
/// singleton-singleton input both tangents coincide.
struct CrossingTangents {
  std::pair<int, int> t1;
  std::pair<int, int> t2;
};

inline CrossingTangents crossing_tangents(const PointSet& P,
                                          const std::vector<int>& red,
                                          const std::vector<int>& blue) {
  bool red_left = false;
  if (!detail::vertical_separation(P, red, blue, red_left))
    throw std::invalid_argument(
        "crossing_tangents: sets not vertically separated");
  // Strict side of every point of idx\{skip} w.r.t. the directed line a->b:
  // +1/-1 when uniform, 0 when the set is empty, -2 when mixed.
  auto uniform_side = [&](const Point& a, const Point& b,
                          const std::vector<int>& idx, int skip) -> int {
    int side = 0;
    for (int q : idx) {
      if (q == skip) continue;
      const int s = orient(a, b, P[q]);
      if (s == 0) return -2;
      if (side == 0)
        side = s;
      else if (side != s)
        return -2;
    }
    return side;
  };
  std::vector<std::pair<int, int>> found;
  for (int r : red)
    for (int b : blue) {
      const int sr = uniform_side(P[r], P[b], red, r);
      if (sr == -2) continue;
      const int sb = uniform_side(P[r], P[b], blue, b);
      if (sb == -2) continue;
      if (sr != 0 && sb != 0 && sr == sb) continue;  // outer tangent
      found.emplace_back(r, b);
    }
  if (found.size() == 1 && red.size() == 1 && blue.size() == 1)
    found.push_back(found.front());
  if (found.size() != 2)
    throw std::logic_error("crossing_tangents: expected exactly two tangents");
  std::sort(found.begin(), found.end());
  return CrossingTangents{found[0], found[1]};
}

namespace detail {

struct HsCounts {
  int left = 0;
  int right = 0;
  int on = 0;
};

inline HsCounts hs_count(const PointSet& P, const Line& line,
                         const std::vector<int>& idx) {
  HsCounts c;
  for (int i : idx) {
    const int s = line.side(P[i]);
    if (s > 0)
      ++c.left;
    else if (s < 0)
      ++c.right;
    else
      ++c.on;
  }
  return c;
}

inline bool hs_satisfies(const PointSet& P, const Line& line,
                         const std::vector<int>& red,
                         const std::vector<int>& blue) {
  const int nr = static_cast<int>(red.size());
  const int nb = static_cast<int>(blue.size());
  const HsCounts r = hs_count(P, line, red);
  const HsCounts b = hs_count(P, line, blue);
  if (r.on != nr % 2 || b.on != nb % 2) return false;
  return r.left == nr / 2 && r.right == nr / 2 && b.left == nb / 2 &&
         b.right == nb / 2;
}

}  // namespace detail

/// Exact ham-sandwich cut: a line with floor(|R|/2) red points strictly on
/// each side (one red on the line iff |R| is odd), and symmetrically for
/// blue. Search over candidate lines through one red and one blue point;
/// even-size cases are resolved by an explicit tiny rational rotation that
/// is then verified exactly.
inline Line ham_sandwich_cut(const PointSet& P, const std::vector<int>& red,
                             const std::vector<int>& blue) {
  if (red.empty() || blue.empty())
    throw std::invalid_argument("ham_sandwich_cut: empty color class");
  const int nr = static_cast<int>(red.size());
  const int nb = static_cast<int>(blue.size());

  // need_r / need_b: required side for the two candidate points after the
  // perturbation (+1 left, -1 right, 0 stay on the line).
  auto occupied = [&](const Rat& qx, const Rat& qy) {
    for (const Point& p : P.points)
      if (p.x == qx && p.y == qy) return true;
    return false;
  };
  auto perturbed = [&](const Point& r, const Point& b, int need_r,
                       int need_b) -> std::optional<Line> {
    const Rat dx = b.x - r.x;
    const Rat dy = b.y - r.y;
    std::vector<std::pair<Rat, Rat>> pivots;
    int eps_sign;
    if (need_r == 0) {  // pivot at r keeps r on the line; side(b) = -sign(eps)
      pivots.emplace_back(r.x, r.y);
      eps_sign = -need_b;
    } else if (need_b == 0) {  // pivot at b; side(r) = +sign(eps)
      pivots.emplace_back(b.x, b.y);
      eps_sign = need_r;
    } else if (need_r != need_b) {
      // a pivot strictly between r and b sends them to opposite sides
      for (const auto& t : {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(2, 5)})
        pivots.emplace_back(r.x + t * dx, r.y + t * dy);
      eps_sign = need_r;
    } else {
      // a pivot beyond r sends both to the same side; side = -sign(eps)
      for (const auto& t : {Rat(1), Rat(1, 2), Rat(2), Rat(1, 3)})
        pivots.emplace_back(r.x - t * dx, r.y - t * dy);
      eps_sign = -need_r;
    }
    for (const auto& [mx, my] : pivots) {
      if (need_r != 0 && need_b != 0 && occupied(mx, my)) continue;
      for (int k = 8; k <= 512; k *= 2) {
        const Rat eps = Rat(eps_sign, BigInt(1) << k);
        // direction rotated towards perp(d) = (-dy, dx)
        const Line cand{mx, my, dx - eps * dy, dy + eps * dx};
        if (detail::hs_satisfies(P, cand, red, blue)) return cand;
      }
    }
    return std::nullopt;
  };

  for (int ri : red) {
    for (int bi : blue) {
      const Point& r = P[ri];
      const Point& b = P[bi];
      int lr = 0, rr = 0, lb = 0, rb = 0;
      bool clean = true;
      for (int q : red) {
        if (q == ri) continue;
        const int s = orient(r, b, P[q]);
        if (s == 0) {
          clean = false;
          break;
        }
        (s > 0 ? lr : rr)++;
      }
      if (!clean) continue;
      for (int q : blue) {
        if (q == bi) continue;
        const int s = orient(r, b, P[q]);
        if (s == 0) {
          clean = false;
          break;
        }
        (s > 0 ? lb : rb)++;
      }
      if (!clean) continue;

      if (nr % 2 == 1 && nb % 2 == 1) {
        if (lr == rr && lb == rb) {
          const Line line = Line::through(r, b);
          if (detail::hs_satisfies(P, line, red, blue)) return line;
        }
        continue;
      }
      const int dr = nr / 2 - lr;  // reds the left side still needs
      const int db = nb / 2 - lb;
      if (nr % 2 == 0 && nb % 2 == 0) {
        if ((dr == 0 || dr == 1) && (db == 0 || db == 1)) {
          auto line = perturbed(r, b, dr == 1 ? 1 : -1, db == 1 ? 1 : -1);
          if (line) return *line;
        }
      } else if (nr % 2 == 1) {  // red stays on the line, blue moves off
        if (lr == rr && (db == 0 || db == 1)) {
          auto line = perturbed(r, b, 0, db == 1 ? 1 : -1);
          if (line) return *line;
        }
      } else {  // blue stays on the line, red moves off
        if (lb == rb && (dr == 0 || dr == 1)) {
          auto line = perturbed(r, b, dr == 1 ? 1 : -1, 0);
          if (line) return *line;
        }
      }
    }
  }
  throw std::logic_error("ham_sandwich_cut: search exhausted");
}

/// Convenience overload for two standalone point sets: R gets indices
/// 0..|R|-1 and B the rest in a combined set.
inline Line ham_sandwich_cut(const PointSet& R, const PointSet& B) {
  PointSet all;
  all.points = R.points;
  all.points.insert(all.points.end(), B.points.begin(), B.points.end());
  std::vector<int> red(static_cast<std::size_t>(R.size()));
  std::iota(red.begin(), red.end(), 0);
  std::vector<int> blue(static_cast<std::size_t>(B.size()));
  std::iota(blue.begin(), blue.end(), R.size());
  return ham_sandwich_cut(all, red, blue);
}

}  // namespace matchpack
