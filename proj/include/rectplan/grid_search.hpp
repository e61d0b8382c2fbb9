#pragma once

#include <optional>

#include "rectplan/instance.hpp"

namespace rectplan {

// Minimum-length serial schedule for axis-aligned free-plane instances by
// exhaustive search over moves that end on instance-grid lines. Iterative
// deepening; at depth d the grid is rebuilt at stacking depth d. Among
// equal-length optima the result is lexicographically least under
// (robot index, direction index in (+x,-x,+y,-y), destination coordinate).
//
// Returns nullopt when no schedule exists within the budget (defaults to 4k;
// with the axis-aligned set, free-plane instances are always solvable in at
// most 4k moves). Throws Error("UnsupportedMode") for parallel, boxed or
// non-axis-aligned instances.
std::optional<Schedule> solve_serial_grid(const Instance& inst, int threads = 1);

}  // namespace rectplan
