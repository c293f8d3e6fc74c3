#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regionid/polytope.hpp"

namespace regionid {

struct Curve {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (t, value)
};

/// Chronological region polygons nested over the prior box, goal marked
/// with a cross. Output has no timestamps; identical input gives identical
/// bytes. Throws "no data" when there is nothing to draw.
std::string svg_region_snapshots(const std::vector<ConvexPolygon>& polygons,
                                 const Vec2& goal, const Vec2& box_lo,
                                 const Vec2& box_hi, const std::string& title);

/// Time-series plot, one polyline per curve, shared axes.
/// Throws "no data" when every curve is empty.
std::string svg_curves(const std::vector<Curve>& curves,
                       const std::string& title);

}  // namespace regionid
