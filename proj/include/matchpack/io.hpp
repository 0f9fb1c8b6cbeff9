#pragma once

#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "matchpack/geom.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json encode_big(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt decode_big(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw IoError(where + ": invalid integer literal");
    }
  }
  throw IoError(where + ": expected integer or integer string");
}

}  // namespace detail

inline nlohmann::json pointset_to_json(const PointSet& P) {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& p : P.points)
    pts.push_back({detail::encode_big(numerator(p.x)),
                   detail::encode_big(denominator(p.x)),
                   detail::encode_big(numerator(p.y)),
                   detail::encode_big(denominator(p.y))});
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : P.meta) meta[k] = v;
  return {{"n", P.size()}, {"points", std::move(pts)}, {"meta", std::move(meta)}};
}

/// Parses a point set. General position is rejected exactly up to n=1024;
/// beyond that (or with check_general_position=false) a seeded spot check
/// is used instead of the full O(n^3) scan.
inline PointSet pointset_from_json(const nlohmann::json& j,
                                   bool check_general_position = true) {
  if (!j.is_object() || !j.contains("n") || !j.contains("points"))
    throw IoError("point set: expected object with \"n\" and \"points\"");
  if (!j["n"].is_number_integer()) throw IoError("point set: \"n\" not an integer");
  const int n = j["n"].get<int>();
  const auto& pts = j["points"];
  if (!pts.is_array() || static_cast<int>(pts.size()) != n)
    throw IoError("point set: \"points\" must be an array of length n");
  PointSet P;
  for (int i = 0; i < n; ++i) {
    const auto& q = pts[i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!q.is_array() || q.size() != 4)
      throw IoError(where + ": expected [num_x, den_x, num_y, den_y]");
    const BigInt nx = detail::decode_big(q[0], where);
    const BigInt dx = detail::decode_big(q[1], where);
    const BigInt ny = detail::decode_big(q[2], where);
    const BigInt dy = detail::decode_big(q[3], where);
    if (dx == 0 || dy == 0) throw IoError(where + ": zero denominator");
    P.points.emplace_back(Rat(nx, dx), Rat(ny, dy));
  }
  if (j.contains("meta") && j["meta"].is_object())
    for (const auto& [k, v] : j["meta"].items())
      P.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (P[i] == P[k])
        throw IoError("points[" + std::to_string(k) + "]: duplicate of points[" +
                      std::to_string(i) + "]");
  if (check_general_position) {
    if (n <= 1024) {
      if (auto t = find_collinear_triple(P))
        throw IoError("points[" + std::to_string((*t)[2]) +
                      "]: collinear with points[" + std::to_string((*t)[0]) +
                      "] and points[" + std::to_string((*t)[1]) + "]");
    } else {
      std::mt19937_64 spot(0x51ed270b);
      for (int trial = 0; trial < 200000; ++trial) {
        const int a = static_cast<int>(spot() % static_cast<unsigned>(n));
        const int b = static_cast<int>(spot() % static_cast<unsigned>(n));
        const int c = static_cast<int>(spot() % static_cast<unsigned>(n));
        if (a == b || b == c || a == c) continue;
        if (orient(P[a], P[b], P[c]) == 0)
          throw IoError("collinear triple found by spot check");
      }
    }
  }
  return P;
}

inline nlohmann::json packing_to_json(const Packing& pack) {
  nlohmann::json ms = nlohmann::json::array();
  for (const Matching& M : pack.matchings) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : M.edges) edges.push_back({e.a, e.b});
    ms.push_back(std::move(edges));
  }
  return {{"n", pack.n}, {"matchings", std::move(ms)}};
}

inline Packing packing_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matchings"))
    throw IoError("packing: expected object with \"n\" and \"matchings\"");
  if (!j["n"].is_number_integer()) throw IoError("packing: \"n\" not an integer");
  Packing pack;
  pack.n = j["n"].get<int>();
  if (pack.n <= 0) throw IoError("packing: n must be positive");
  const auto& ms = j["matchings"];
  if (!ms.is_array()) throw IoError("packing: \"matchings\" must be an array");
  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    const std::string where = "matchings[" + std::to_string(mi) + "]";
    if (!ms[mi].is_array()) throw IoError(where + ": expected an edge array");
    Matching M;
    M.n = pack.n;
    for (std::size_t ei = 0; ei < ms[mi].size(); ++ei) {
      const auto& e = ms[mi][ei];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw IoError(where + "[" + std::to_string(ei) + "]: expected [i, j]");
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= pack.n || b >= pack.n)
        throw IoError(where + "[" + std::to_string(ei) +
                      "]: index out of range");
      if (a == b)
        throw IoError(where + "[" + std::to_string(ei) + "]: degenerate edge");
      M.edges.emplace_back(a, b);
    }
    pack.matchings.push_back(std::move(M));
  }
  return pack;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << data;
}

inline nlohmann::json parse_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace detail

inline void save_pointset(const PointSet& P, const std::string& path) {
  detail::write_file(path, pointset_to_json(P).dump(2) + "\n");
}

inline PointSet load_pointset(const std::string& path,
                              bool check_general_position = true) {
  return pointset_from_json(detail::parse_file(path), check_general_position);
}

inline void save_packing(const Packing& pack, const std::string& path) {
  detail::write_file(path, packing_to_json(pack).dump(2) + "\n");
}

inline Packing load_packing(const std::string& path) {
  return packing_from_json(detail::parse_file(path));
}

}  // namespace matchpack
