#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchpack {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& v) { return v.sign(); }

inline double to_double(const Rat& v) { return v.convert_to<double>(); }

/// Planar point with exact rational coordinates. Coordinates that are
/// int64-sized integers are mirrored into (xi, yi) so the orientation
/// predicate can run on machine integers; the rationals stay authoritative.
struct Point {
  Rat x;
  Rat y;
  std::int64_t xi = 0;
  std::int64_t yi = 0;
  bool fast = false;

  Point() = default;
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) { refresh(); }
  Point(std::int64_t px, std::int64_t py)
      : x(px), y(py), xi(px), yi(py), fast(true) {}

  void refresh() {
    fast = false;
    static const BigInt lim = BigInt(1) << 60;
    if (denominator(x) == 1 && denominator(y) == 1) {
      const BigInt nx = numerator(x);
      const BigInt ny = numerator(y);
      if (nx > -lim && nx < lim && ny > -lim && ny < lim) {
        xi = nx.convert_to<std::int64_t>();
        yi = ny.convert_to<std::int64_t>();
        fast = true;
      }
    }
  }

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline bool coord_less(const Point& a, const Point& b) {
  if (a.fast && b.fast)
    return a.xi < b.xi || (a.xi == b.xi && a.yi < b.yi);
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Rat dist2(const Point& a, const Point& b) {
  const Rat dx = a.x - b.x;
  const Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Euclidean length, used only to guide searches; never in certificates.
inline double dist(const Point& a, const Point& b) {
  return std::sqrt(to_double(dist2(a, b)));
}

/// Unordered index pair in canonical (min,max) form.
struct Edge {
  int a = 0;
  int b = 1;

  Edge() = default;
  Edge(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {
    if (i == j) throw std::invalid_argument("Edge: endpoints must differ");
  }
  auto operator<=>(const Edge&) const = default;
  bool touches(int v) const { return a == v || b == v; }
  bool shares_vertex(const Edge& o) const {
    return touches(o.a) || touches(o.b);
  }
  int other(int v) const { return v == a ? b : a; }
};

struct PointSet {
  std::vector<Point> points;
  std::map<std::string, std::string> meta;

  int size() const { return static_cast<int>(points.size()); }
  const Point& operator[](int i) const {
    return points[static_cast<std::size_t>(i)];
  }
  Point& operator[](int i) { return points[static_cast<std::size_t>(i)]; }
};

using EdgeList = std::vector<Edge>;

/// A perfect matching on indices 0..n-1. `edges` keeps construction order;
/// treat it as a set (canonical pairs, no duplicates).
struct Matching {
  int n = 0;
  EdgeList edges;

  Matching() = default;
  Matching(int nn, EdgeList ee) : n(nn), edges(std::move(ee)) {}

  EdgeList sorted_edges() const {
    EdgeList s = edges;
    std::sort(s.begin(), s.end());
    return s;
  }
  bool contains(const Edge& e) const {
    for (const Edge& f : edges)
      if (f == e) return true;
    return false;
  }
  /// Every index in [0,n) covered exactly once.
  bool is_perfect() const {
    if (n <= 0 || n % 2 != 0 ||
        edges.size() != static_cast<std::size_t>(n) / 2)
      return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      if (e.a < 0 || e.b >= n) return false;
      if (seen[static_cast<std::size_t>(e.a)] ||
          seen[static_cast<std::size_t>(e.b)])
        return false;
      seen[static_cast<std::size_t>(e.a)] = 1;
      seen[static_cast<std::size_t>(e.b)] = 1;
    }
    return true;
  }
};

struct Packing {
  int n = 0;
  std::vector<Matching> matchings;

  int size() const { return static_cast<int>(matchings.size()); }
};

using Cycle = std::vector<int>;

struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

/// Exact line through a point with a nonzero direction.
struct Line {
  Rat px, py;
  Rat dx, dy;

  static Line through(const Point& a, const Point& b) {
    if (a == b) throw std::invalid_argument("Line::through: identical points");
    return Line{a.x, a.y, b.x - a.x, b.y - a.y};
  }
  /// +1 left of the direction, -1 right, 0 on the line.
  int side(const Point& q) const {
    return sign_of(dx * (q.y - py) - dy * (q.x - px));
  }
};

}  // namespace matchpack
