#pragma once

#include <optional>
#include <vector>

#include "rectplan/instance.hpp"
#include "rectplan/lp.hpp"

namespace rectplan {

// One guessed simultaneous step: distinct robots, each with an axis direction
// index (0..3 for +x, -x, +y, -y). Amplitudes become LP variables; all movers
// in a step progress at equal speed and each halts at its own amplitude.
struct ParallelEvent {
    std::vector<std::pair<size_t, size_t>> movers;  // (robot, axis dir), robots ascending
};

// Branch choices per event:
//   stationary[e][m][s]: separation side (0 sweep-ahead-of, 1 behind, 2
//     above, 3 below, in the mover's canonical frame) for the m-th mover of
//     event e against the s-th non-moving robot (both ascending).
//   pairs[e][p]: case id for the p-th mover pair (i<j by position in the
//     event): same-axis pairs take 0..3 (above / below / ordered chase or
//     diverge / mirrored), perpendicular pairs 0..5 (the four trace-disjoint
//     scenarios, then the two crossing escapes, each escape carrying its
//     geometry guards and the amplitude-sufficiency row).
struct ParallelCases {
    std::vector<std::vector<std::vector<int>>> stationary;
    std::vector<std::vector<int>> pairs;
};

LinProblem build_parallel_lp(const Instance& inst, const std::vector<ParallelEvent>& events,
                             const ParallelCases& cases);

// Branch count for a mover pair with the given axis directions.
int parallel_pair_branch_count(size_t dir_p, size_t dir_q);

// Minimum-step parallel schedule by event-sequence + branch enumeration with
// exact-LP pruning. Axis-aligned instances only (Error("NonAxisAligned"));
// budget min(budget, 4k) in the free plane, min(budget, 2k*5^(k(k-1))) boxed.
std::optional<Schedule> solve_parallel_lp(const Instance& inst);

}  // namespace rectplan
