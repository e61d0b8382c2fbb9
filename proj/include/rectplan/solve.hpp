#pragma once

#include <optional>

#include "rectplan/instance.hpp"

namespace rectplan {

enum class SolverChoice { Auto, Grid, Lp };

struct SolveOptions {
    SolverChoice solver = SolverChoice::Auto;
    std::optional<long> max_moves;  // overrides the instance budget
    bool legacy_cases = false;
    int threads = 1;
};

// Routes to the grid solver (serial, axis-aligned, free plane) or the
// event-LP solvers; nullopt means no schedule exists within the budget.
std::optional<Schedule> solve(const Instance& inst, const SolveOptions& opts = {});

}  // namespace rectplan
