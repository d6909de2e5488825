#pragma once

#include <string>

#include "updraw/drawing.hpp"

namespace updraw {

struct SvgOptions {
    double target_width = 800; /* pixels, before margins */
    bool labels = true;
};

/* deterministic standalone SVG; y grows upward in drawings, so the page is
 * flipped */
std::string render_svg(const Drawing& d, const SvgOptions& opt = {});

} // namespace updraw
