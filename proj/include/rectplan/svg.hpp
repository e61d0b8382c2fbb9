#pragma once

#include <string>

#include "rectplan/instance.hpp"

namespace rectplan {

// One SVG 1.1 frame per step: robots at their pre-step positions, translucent
// sweep ghosts for the movers, goal outlines, and the box when present.
// Files are named step_001.svg, step_002.svg, ... inside out_dir.
// Returns the number of frames written.
size_t render_schedule_svg(const Instance& inst, const Schedule& s, const std::string& out_dir);

}  // namespace rectplan
