#pragma once

#include <array>
#include <charconv>
#include <string>

#include "matchpack/geom.hpp"
#include "matchpack/types.hpp"

namespace matchpack {

namespace detail {

inline void append_num(std::string& s, double v) {
  std::array<char, 32> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  s.append(buf.data(), r.ptr);
}

}  // namespace detail

/// Deterministic standalone SVG: points as dots, hull dashed, one stroke
/// color per matching (8-color palette, cycling). Byte-identical output for
/// identical inputs.
inline std::string render_svg(const PointSet& P,
                              const Packing* pack = nullptr) {
  static const std::array<const char*, 8> palette = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
      "#ff7f00", "#a65628", "#f781bf", "#999999"};
  const int n = P.size();
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  for (int i = 0; i < n; ++i) {
    const double x = to_double(P[i].x);
    const double y = to_double(P[i].y);
    if (i == 0) {
      minx = maxx = x;
      miny = maxy = y;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 800.0 / extent;
  const double pad = 40.0;
  const double width = (maxx - minx) * scale + 2 * pad;
  const double height = (maxy - miny) * scale + 2 * pad;
  auto sx = [&](const Rat& x) { return (to_double(x) - minx) * scale + pad; };
  auto sy = [&](const Rat& y) { return (maxy - to_double(y)) * scale + pad; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 ";
  detail::append_num(svg, width);
  svg += " ";
  detail::append_num(svg, height);
  svg += "\">\n";
  if (n >= 3) {
    svg += "  <polygon fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"6 4\" points=\"";
    bool first = true;
    for (int v : convex_hull(P)) {
      if (!first) svg += " ";
      first = false;
      detail::append_num(svg, sx(P[v].x));
      svg += ",";
      detail::append_num(svg, sy(P[v].y));
    }
    svg += "\"/>\n";
  }
  if (pack != nullptr) {
    for (int mi = 0; mi < pack->size(); ++mi) {
      svg += "  <g stroke=\"";
      svg += palette[static_cast<std::size_t>(mi) % palette.size()];
      svg += "\" stroke-width=\"2\">\n";
      for (const Edge& e : pack->matchings[static_cast<std::size_t>(mi)].edges) {
        svg += "    <line x1=\"";
        detail::append_num(svg, sx(P[e.a].x));
        svg += "\" y1=\"";
        detail::append_num(svg, sy(P[e.a].y));
        svg += "\" x2=\"";
        detail::append_num(svg, sx(P[e.b].x));
        svg += "\" y2=\"";
        detail::append_num(svg, sy(P[e.b].y));
        svg += "\"/>\n";
      }
      svg += "  </g>\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    svg += "  <circle fill=\"#111111\" r=\"4\" cx=\"";
    detail::append_num(svg, sx(P[i].x));
    svg += "\" cy=\"";
    detail::append_num(svg, sy(P[i].y));
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace matchpack
