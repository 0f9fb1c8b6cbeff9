#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "matchpack/types.hpp"

namespace matchpack::testing {

inline PointSet pts(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords) {
  PointSet P;
  for (const auto& [x, y] : coords) P.points.emplace_back(x, y);
  return P;
}

/// Combined set with R first; returns (P, red indices, blue indices).
struct Bicolored {
  PointSet P;
  std::vector<int> red;
  std::vector<int> blue;
};

inline Bicolored combine(const PointSet& R, const PointSet& B) {
  Bicolored out;
  out.P.points = R.points;
  out.P.points.insert(out.P.points.end(), B.points.begin(), B.points.end());
  out.red.resize(static_cast<std::size_t>(R.size()));
  std::iota(out.red.begin(), out.red.end(), 0);
  out.blue.resize(static_cast<std::size_t>(B.size()));
  std::iota(out.blue.begin(), out.blue.end(), R.size());
  return out;
}

inline std::vector<int> all_of(const PointSet& P) {
  std::vector<int> idx(static_cast<std::size_t>(P.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

}  // namespace matchpack::testing
