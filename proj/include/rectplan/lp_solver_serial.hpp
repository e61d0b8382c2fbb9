#pragma once

#include <optional>
#include <vector>

#include "rectplan/instance.hpp"
#include "rectplan/lp.hpp"

namespace rectplan {

// One guessed move of a schedule skeleton: the robot and the direction index
// (into the instance's direction set). The amplitude is an LP variable.
struct Event {
    size_t robot;
    size_t dir;
};

// Branch choices for one skeleton.
//
// witness[e][j] picks the separating edge for event e against the j-th other
// robot (robots != events[e].robot in ascending order): sweep-hull edges in
// CCW order first, then the other robot's left/right/bottom/top edges. The
// chosen edge's line must keep the other shape in its outer closed half-plane;
// both shapes are convex, so some choice works whenever the move is
// collision-free, and whole-containment is excluded as well.
//
// legacy[e][j][p], present in legacy mode, additionally picks one of the four
// exteriority cases (0: intersection point before the trace edge's low end,
// 1: past its high end, 2: before the robot edge's low end, 3: past its high
// end) for the p-th non-parallel (trace edge, robot edge) pair.
struct SerialCases {
    bool legacy_mode = false;
    std::vector<std::vector<int>> witness;
    std::vector<std::vector<std::vector<int>>> legacy;
};

// The feasibility program for one (skeleton, branch) candidate: variables
// x_e, y_e (mover center at the start of event e) and alpha_e >= 0, with
// destination equations, start/chaining equations, the branch's separation
// rows, and box containment rows when the instance is boxed.
LinProblem build_serial_lp(const Instance& inst, const std::vector<Event>& events,
                           const SerialCases& cases);

// Separating-edge candidates for an event (4 for axis-parallel directions,
// 10 otherwise).
int serial_witness_count(const Instance& inst, const Event& e);

// Non-parallel (trace edge, robot edge) pairs branched over in legacy mode.
size_t legacy_pair_count(const Instance& inst, const Event& e, size_t other);

struct SerialLpOptions {
    bool legacy_cases = false;
};

// Minimum-length serial schedule by exhaustive event-sequence + branch
// enumeration with exact-LP pruning. Free plane and boxed, any direction set.
// Budget: min(budget, 4k) with two non-parallel directions in the free plane,
// min(budget, 2k*5^(k(k-1))) boxed axis-aligned; otherwise an explicit budget
// is required (Error("BudgetRequired")).
std::optional<Schedule> solve_serial_lp(const Instance& inst, const SerialLpOptions& opts = {});

}  // namespace rectplan
