#include "rectplan/solve.hpp"

#include "rectplan/error.hpp"
#include "rectplan/grid_search.hpp"
#include "rectplan/lp_solver_parallel.hpp"
#include "rectplan/lp_solver_serial.hpp"

namespace rectplan {

std::optional<Schedule> solve(const Instance& inst, const SolveOptions& opts) {
    Instance work = inst;
    if (opts.max_moves) work.budget = *opts.max_moves;

    if (work.mode == Mode::Parallel) {
        if (opts.solver == SolverChoice::Grid)
            fail("UnsupportedMode", "the grid solver handles serial instances only");
        return solve_parallel_lp(work);
    }

    bool grid_applicable = work.dirs.is_axis_aligned() && !work.box;
    SolverChoice choice = opts.solver;
    if (choice == SolverChoice::Auto)
        choice = grid_applicable ? SolverChoice::Grid : SolverChoice::Lp;
    if (choice == SolverChoice::Grid)
        return solve_serial_grid(work, opts.threads);
    return solve_serial_lp(work, SerialLpOptions{opts.legacy_cases});
}

}  // namespace rectplan
