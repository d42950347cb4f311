#pragma once

// Rank-2 SVG rendering: the alcove tiling clipped to a window around
// Adm(mu), the region outlined, an optional face shaded (interior dark,
// boundary light), or the boundary-of-Adm overlay with the centers of the
// one-dimensional faces. Geometry is exact until the final print.

#include <optional>
#include <string>

#include "adm/verify.hpp"

namespace adm {

std::string render_svg(const Workspace& ws, std::optional<int> face_idx, bool boundary_overlay);

}  // namespace adm
