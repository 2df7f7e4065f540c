#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

// Minimal SVG rendering for 2D regions: the polygon carved out by the support
// grid plus an optional marker (the derived risk point).  Output is plain
// text, deterministic for identical inputs.

namespace riskgeom {

// World coordinates are mathematical (y up); the writer flips the axis so the
// picture matches the plane.  The view box is the bounding box of everything
// drawn plus a 10% margin; degenerate boxes are padded so singletons stay
// visible.
std::string region_svg(const std::vector<std::array<double, 2>>& polygon,
                       const std::optional<std::array<double, 2>>& marker);

}  // namespace riskgeom
