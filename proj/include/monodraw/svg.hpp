#pragma once
// Minimal SVG rendering of drawings: y axis flipped, vertices as small
// dots, leaf rays dashed and clipped at 1.2 times the bounding box.

#include "monodraw/drawing.hpp"

#include <string>

namespace monodraw {

std::string render_svg(const Drawing& d, double size = 640.0);

}  // namespace monodraw
