#include "wedgepow/svg.hpp"

#include <sstream>
#include <stdexcept>

#include "wedgepow/polytope.hpp"

namespace wedgepow {

std::string render_svg(const PointConfiguration& s, bool show_hull) {
  if (s.dim() != 2) throw std::invalid_argument("render needs a planar configuration");
  std::int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  if (!s.empty()) {
    const auto lo = s.min_corner();
    const auto hi = s.max_corner();
    x0 = lo[0], y0 = lo[1], x1 = hi[0], y1 = hi[1];
  }
  const std::int64_t width = (x1 - x0) * kSvgPitch + 2 * kSvgMargin;
  const std::int64_t height = (y1 - y0) * kSvgPitch + 2 * kSvgMargin;
  // y grows upwards in the lattice, downwards in SVG
  auto px = [&](const LatticePoint& p) { return (p[0] - x0) * kSvgPitch + kSvgMargin; };
  auto py = [&](const LatticePoint& p) { return (y1 - p[1]) * kSvgPitch + kSvgMargin; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  if (show_hull && !s.empty()) {
    const auto hull = convex_hull_2d(s);
    out << "  <polygon points=\"";
    bool first = true;
    for (const auto& v : hull.vertices()) {
      out << (first ? "" : " ") << px(v) << ',' << py(v);
      first = false;
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : s) {
    out << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wedgepow
