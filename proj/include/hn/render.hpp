#pragma once

#include <string>
#include <vector>

#include "hn/polygon.hpp"

namespace hn {

// SVG 1.1 document drawing the polygons on shared axes, y-up, with integer
// gridlines and every vertex labeled with its exact coordinates.
std::string render_svg(const std::vector<HNPolygon>& polygons,
                       const std::vector<std::string>& labels);

// Character-grid plot of the polygons on shared axes, one symbol per polygon,
// with a legend.
std::string render_ascii(const std::vector<HNPolygon>& polygons,
                         const std::vector<std::string>& labels, int cols = 72,
                         int rows = 24);

}  // namespace hn
