#pragma once

#include <optional>

#include "rectplan/instance.hpp"

namespace rectplan {

// Brute-force ground truth for small lattice instances: unit-square robots at
// integer centers, axis-aligned directions. Searches breadth-first over
// integer center tuples inside `window`; a serial transition slides one robot
// any positive integer distance along an axis, a parallel transition moves a
// nonempty robot subset simultaneously. All collision decisions go through
// the geometry predicates; the oracle shares nothing with the solvers.
//
// Returns the exact optimal move/step count, or nullopt when the goal tuple
// is unreachable inside the window. Throws Error("NonLatticeInstance") on
// non-lattice input; bfs_parallel throws Error("StateSpaceExceeded") past
// `state_cap` states.
std::optional<long> bfs_serial(const Instance& inst, const Rect& window);
std::optional<long> bfs_parallel(const Instance& inst, const Rect& window,
                                 size_t state_cap = 10'000'000);

// Smallest integer-aligned window containing the instance grid at depth
// min(budget-or-4k, 4k); boxed instances use the box itself.
Rect default_window(const Instance& inst);

}  // namespace rectplan
