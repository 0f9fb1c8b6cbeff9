#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchpack/geom.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

namespace detail {

constexpr std::int64_t kDyadic = std::int64_t(1) << 24;

/// Near-regular rational points on the unit circle via the tangent
/// half-angle parametrization: exactly concyclic, within ~1e-7 of the
/// regular arc positions.
inline std::vector<Point> circle_points(int m, double phase) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double h = M_PI * (i + phase) / m;  // half-angle in [0, pi)
    const double t = std::tan(h);
    Rat x, y;
    if (std::isfinite(t) && std::fabs(t) <= 1.0) {
      const Rat T(static_cast<std::int64_t>(std::llround(t * kDyadic)),
                  kDyadic);
      const Rat d = 1 + T * T;
      x = (1 - T * T) / d;
      y = 2 * T / d;
    } else {
      const double s = 1.0 / t;
      const Rat S(static_cast<std::int64_t>(std::llround(s * kDyadic)),
                  kDyadic);
      const Rat d = 1 + S * S;
      x = (S * S - 1) / d;
      y = 2 * S / d;
    }
    pts.emplace_back(std::move(x), std::move(y));
  }
  return pts;
}

inline void require_general_position(const PointSet& P, const char* who) {
  if (auto t = find_collinear_triple(P))
    throw std::logic_error(std::string(who) + ": collinear triple " +
                           std::to_string((*t)[0]) + "," +
                           std::to_string((*t)[1]) + "," +
                           std::to_string((*t)[2]));
}

}  // namespace detail

/// n points in convex position on a parabola (no three points of a parabola
/// are ever collinear), listed in ccw radial order about the centroid.
inline PointSet gen_convex(int n, std::uint64_t seed) {
  detail::require_even(n, 4, "gen_convex");
  std::mt19937_64 rng(seed);
  const std::int64_t range = 4000LL * n;
  std::set<std::int64_t> xs;
  while (static_cast<int>(xs.size()) < n)
    xs.insert(static_cast<std::int64_t>(rng() % (2 * range + 1)) - range);
  PointSet P;
  for (std::int64_t x : xs) P.points.emplace_back(x, x * x);
  P.meta["family"] = "convex";
  P.meta["seed"] = std::to_string(seed);
  return P;
}

/// n-1 near-regularly spaced points on a circle (indices 0..n-2, ccw) plus
/// the center at index n-1. Verified exactly: pairwise distinct, no chord
/// line through the center, general position.
inline PointSet gen_regular_wheel(int n) {
  detail::require_even(n, 6, "gen_regular_wheel");
  const int m = n - 1;
  const Point center(std::int64_t(0), std::int64_t(0));
  for (double phase : {0.0, 0.013, 0.029, 0.047, 0.061}) {
    PointSet P;
    P.points = detail::circle_points(m, phase);
    P.points.push_back(center);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m; ++j)
        if (orient(P[i], P[j], center) == 0) {
          ok = false;
          break;
        }
    if (!ok) continue;
    if (n <= 128 && !in_general_position(P)) continue;
    P.meta["family"] = "wheel";
    return P;
  }
  throw std::logic_error("gen_regular_wheel: could not realize configuration");
}

/// Wheel variation: |X| = n - |Y| points on a circle (odd count), |Y| =
/// 2*floor(n/6) - 1 points strictly inside the intersection of all
/// center-side half-planes of X-chords. |Y| = 1 degenerates to the regular
/// wheel. X occupies indices 0..|X|-1, Y the rest.
inline PointSet gen_wheel_variation(int n) {
  detail::require_even(n, 6, "gen_wheel_variation");
  const int ny = 2 * (n / 6) - 1;
  const int nx = n - ny;
  const Point origin(std::int64_t(0), std::int64_t(0));
  const double inradius = std::sin(M_PI / (2.0 * nx));
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double phase = 0.017 * attempt;
    PointSet P;
    P.points = detail::circle_points(nx, phase);
    if (ny == 1) {
      P.points.push_back(origin);
    } else {
      const Rat ry(
          static_cast<std::int64_t>(std::llround(
              inradius / (2.0 + attempt) * detail::kDyadic)),
          detail::kDyadic);
      for (const Point& q : detail::circle_points(ny, 0.37 + phase))
        P.points.emplace_back(ry * q.x, ry * q.y);
    }
    bool ok = true;
    for (int p = 0; p < nx && ok; ++p)
      for (int q = p + 1; q < nx && ok; ++q) {
        const int s0 = orient(P[p], P[q], origin);
        if (s0 == 0) {
          ok = false;
          break;
        }
        for (int y = nx; y < n; ++y)
          if (orient(P[p], P[q], P[y]) != s0) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;
    if (n <= 128 && !in_general_position(P)) continue;
    P.meta["family"] = "wheel-variation";
    P.meta["x_count"] = std::to_string(nx);
    P.meta["y_count"] = std::to_string(ny);
    return P;
  }
  throw std::logic_error(
      "gen_wheel_variation: could not realize configuration");
}

/// n points with integer coordinates, general position enforced by
/// rejection-resampling (exact incremental checks up to n=1500, seeded spot
/// checks beyond).
inline PointSet gen_random(int n, std::uint64_t seed) {
  detail::require_even(n, 2, "gen_random");
  std::mt19937_64 rng(seed);
  const std::int64_t range = std::int64_t(1) << 40;
  auto draw = [&] {
    return static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
  };
  PointSet P;
  const bool full_check = n <= 1500;
  long long attempts = 0;
  while (P.size() < n) {
    if (++attempts > 1000LL * n + 1000)
      throw std::logic_error("gen_random: rejection sampling stalled");
    const Point cand(draw(), draw());
    bool ok = true;
    const int k = P.size();
    for (int i = 0; i < k && ok; ++i)
      if (P[i] == cand) ok = false;
    if (ok && full_check) {
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k; ++j)
          if (orient(P[i], P[j], cand) == 0) {
            ok = false;
            break;
          }
    }
    if (ok) P.points.push_back(cand);
  }
  if (!full_check) {
    std::mt19937_64 spot(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 200000; ++trial) {
      const int a = static_cast<int>(spot() % static_cast<unsigned>(n));
      const int b = static_cast<int>(spot() % static_cast<unsigned>(n));
      const int c = static_cast<int>(spot() % static_cast<unsigned>(n));
      if (a == b || b == c || a == c) continue;
      if (orient(P[a], P[b], P[c]) == 0)
        throw std::logic_error("gen_random: spot check found collinear triple");
    }
  }
  P.meta["family"] = "random";
  P.meta["seed"] = std::to_string(seed);
  return P;
}

/// k nested triangles (3k points): triangle i at scale 3^-(i) of the
/// outermost, rotated per level to keep general position. Index layout:
/// triangle i owns indices 3i, 3i+1, 3i+2, outermost first. Containment,
/// general position, and the segment predicate used by the third-matching
/// construction are all verified exactly.
inline PointSet gen_nested_triangles(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("gen_nested_triangles: k must be even, >= 2");
  if (k > 26)
    throw std::invalid_argument("gen_nested_triangles: k too large (max 26)");
  for (int attempt = 0; attempt < 12; ++attempt) {
    const double delta = (15.0 + 3.0 * attempt) * M_PI / 180.0;
    PointSet P;
    double r = 840.0 * std::pow(3.0, k - 1);
    for (int i = 0; i < k; ++i, r /= 3.0) {
      for (int j = 0; j < 3; ++j) {
        const double ang = M_PI / 2 + j * (2 * M_PI / 3) + i * delta;
        P.points.emplace_back(
            static_cast<std::int64_t>(std::llround(r * std::cos(ang))),
            static_cast<std::int64_t>(std::llround(r * std::sin(ang))));
      }
    }
    auto vertex = [&](int tri, int j) -> const Point& {
      return P[3 * tri + j];
    };
    bool ok = in_general_position(P);
    // strict nesting: every vertex of triangle i inside triangle i-1
    for (int i = 1; i < k && ok; ++i)
      for (int j = 0; j < 3 && ok; ++j)
        for (int s = 0; s < 3; ++s)
          if (orient(vertex(i - 1, s), vertex(i - 1, (s + 1) % 3),
                     vertex(i, j)) <= 0) {
            ok = false;
            break;
          }
    // a segment from an outer vertex to an inner vertex must not enter the
    // inner triangle (i.e. must not cross its opposite side)
    for (int i = 0; i + 1 < k && ok; ++i)
      for (int xo = 0; xo < 3 && ok; ++xo)
        for (int yi = 0; yi < 3; ++yi) {
          const Point& x = vertex(i, xo);
          const Point& y = vertex(i + 1, yi);
          const Point& s1 = vertex(i + 1, (yi + 1) % 3);
          const Point& s2 = vertex(i + 1, (yi + 2) % 3);
          if (segments_cross(x, y, s1, s2)) {
            ok = false;
            break;
          }
        }
    if (!ok) continue;
    P.meta["family"] = "nested-triangles";
    P.meta["k"] = std::to_string(k);
    return P;
  }
  throw std::logic_error(
      "gen_nested_triangles: could not realize configuration");
}

}  // namespace matchpack
