#pragma once

#include <vector>

#include "rectplan/instance.hpp"

namespace rectplan {

// Axis-aligned line grid attached to an instance: sorted, deduplicated
// vertical-line abscissas and horizontal-line ordinates.
struct Grid {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
};

// Build the instance grid at stacking depth `depth`:
//   * basic lines through every robot's start and goal center, and
//   * for each basic line b, each robot width w_b whose start/goal center
//     lies on b, each robot width w, and each multiset of 1..depth robot
//     widths with sum S, the lines at x(b) +- (w_b/2 + w/2 + S)
// (the horizontal construction uses heights). Requires the axis-aligned
// direction set; throws Error("NonAxisAlignedDirections") otherwise.
Grid build_grid(const Instance& inst, long depth);

}  // namespace rectplan
