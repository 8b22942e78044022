#pragma once

#include <string>

#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

inline constexpr int kSvgPitch = 40;   // pixels per lattice unit
inline constexpr int kSvgMargin = 30;  // pixels around the bounding box

/// Dot diagram of a planar configuration, optionally with its hull outline.
/// Output depends only on the input (integer pixel coordinates throughout),
/// so identical inputs give byte-identical documents.
std::string render_svg(const PointConfiguration& s, bool show_hull);

}  // namespace wedgepow
