#pragma once

#include <string>

#include "weylfold/root_system.hpp"

namespace weylfold {

// Static SVG for rank-2 kinds: wall arrangement, the W.lambda orbit, the
// dual-hull bounding box, folded-gallery endpoints, and one minimal gallery
// path. Throws std::invalid_argument for rank != 2.
void render_svg(const RootSystem& rs, const VecQ& lambda, const std::string& path);

}  // namespace weylfold
