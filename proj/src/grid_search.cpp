#include "rectplan/grid_search.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

#include "rectplan/error.hpp"
#include "rectplan/grid.hpp"

namespace rectplan {

namespace {

const std::array<Vec2, 4> kDirs = {
    Vec2(Rational(1), Rational(0)), Vec2(Rational(-1), Rational(0)),
    Vec2(Rational(0), Rational(1)), Vec2(Rational(0), Rational(-1))};

struct SearchContext {
    const Instance* inst;
    const Grid* grid;
    long limit;
    // States already explored without success, keyed to the largest remaining
    // budget at which they failed.
    std::unordered_map<std::string, long> failed;
};

std::string state_key(const std::vector<Rect>& pos) {
    std::string key;
    for (const Rect& r : pos) {
        key += r.cx.get_str();
        key += ',';
        key += r.cy.get_str();
        key += ';';
    }
    return key;
}

// Admissible lower bound: every robot off-goal on an axis needs at least one
// move on that axis.
long remaining_lower_bound(const Instance& inst, const std::vector<Rect>& pos) {
    long h = 0;
    for (size_t i = 0; i < pos.size(); ++i) {
        if (pos[i].cx != inst.robots[i].goal.cx) ++h;
        if (pos[i].cy != inst.robots[i].goal.cy) ++h;
    }
    return h;
}

bool at_goal(const Instance& inst, const std::vector<Rect>& pos) {
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i] != inst.robots[i].goal) return false;
    return true;
}

// Depth-first search in canonical move order; the first completed schedule is
// the lexicographically least one of the current length.
bool dfs(SearchContext& ctx, std::vector<Rect>& pos, long used, std::vector<Move>& path) {
    const Instance& inst = *ctx.inst;
    long remaining = ctx.limit - used;
    if (at_goal(inst, pos)) return true;
    if (remaining_lower_bound(inst, pos) > remaining) return false;

    // Consecutive moves of one robot along one axis merge into a shorter
    // schedule, so they never occur in a minimum-length one. The ban is part
    // of the memo key: a state that failed under a ban may still complete
    // without it.
    size_t banned_robot = inst.k();
    int banned_axis = -1;
    if (!path.empty()) {
        banned_robot = path.back().robot;
        banned_axis = sgn(path.back().dir.x) != 0 ? 0 : 1;
    }

    std::string key = state_key(pos);
    key += std::to_string(banned_robot);
    key += banned_axis == 0 ? 'x' : (banned_axis == 1 ? 'y' : '-');
    if (auto it = ctx.failed.find(key); it != ctx.failed.end() && it->second >= remaining)
        return false;

    for (size_t r = 0; r < inst.k(); ++r) {
        for (size_t d = 0; d < 4; ++d) {
            int axis = d < 2 ? 0 : 1;
            if (r == banned_robot && axis == banned_axis) continue;
            const std::vector<Rational>& lines = axis == 0 ? ctx.grid->xs : ctx.grid->ys;
            const Rational& cur = axis == 0 ? pos[r].cx : pos[r].cy;
            for (const Rational& dest : lines) {
                int c = cmp(dest, cur);
                if (c == 0) continue;
                if ((d == 0 || d == 2) ? c < 0 : c > 0) continue;  // wrong side
                Rational amp = abs(dest - cur);
                Vec2 disp = kDirs[d] * amp;
                bool blocked = false;
                for (size_t o = 0; o < inst.k() && !blocked; ++o)
                    if (o != r && serial_collision(pos[r], disp, pos[o])) blocked = true;
                if (blocked) continue;

                Rect saved = pos[r];
                pos[r] = translate(pos[r], disp);
                path.push_back({r, kDirs[d], amp});
                if (dfs(ctx, pos, used + 1, path)) return true;
                path.pop_back();
                pos[r] = saved;
            }
        }
    }

    auto [it, inserted] = ctx.failed.try_emplace(std::move(key), remaining);
    if (!inserted && it->second < remaining) it->second = remaining;
    return false;
}

// First moves in canonical order at the given depth, for the thread split.
struct FirstMove {
    size_t robot;
    size_t dir;
    Rational dest;
};

std::vector<FirstMove> first_moves(const Instance& inst, const Grid& grid,
                                   const std::vector<Rect>& pos) {
    std::vector<FirstMove> out;
    for (size_t r = 0; r < inst.k(); ++r)
        for (size_t d = 0; d < 4; ++d) {
            int axis = d < 2 ? 0 : 1;
            const std::vector<Rational>& lines = axis == 0 ? grid.xs : grid.ys;
            const Rational& cur = axis == 0 ? pos[r].cx : pos[r].cy;
            for (const Rational& dest : lines) {
                int c = cmp(dest, cur);
                if (c == 0) continue;
                if ((d == 0 || d == 2) ? c < 0 : c > 0) continue;
                out.push_back({r, d, dest});
            }
        }
    return out;
}

}  // namespace

std::optional<Schedule> solve_serial_grid(const Instance& inst, int threads) {
    if (inst.mode != Mode::Serial)
        fail("UnsupportedMode", "grid solver handles serial instances");
    if (inst.box)
        fail("UnsupportedMode", "grid solver handles free-plane instances (route boxed "
                                "instances to the LP solver)");
    if (!inst.dirs.is_axis_aligned())
        fail("UnsupportedMode", "grid solver needs the axis-aligned direction set");
    if (threads < 1) fail("InvariantViolation", "thread count must be >= 1");

    const long four_k = 4 * static_cast<long>(inst.k());
    const long max_len = inst.budget ? std::min(*inst.budget, four_k) : four_k;

    std::vector<Rect> start = inst.start_rects();
    if (at_goal(inst, start)) return Schedule{};

    for (long limit = 1; limit <= max_len; ++limit) {
        Grid grid = build_grid(inst, limit);

        if (threads <= 1) {
            SearchContext ctx{&inst, &grid, limit, {}};
            std::vector<Rect> pos = start;
            std::vector<Move> path;
            if (dfs(ctx, pos, 0, path)) return Schedule::serial(std::move(path));
            continue;
        }

        // Split the canonical first moves across workers; the earliest
        // first-move index that completes wins, which reproduces the
        // single-threaded (lexicographically least) result.
        std::vector<FirstMove> firsts = first_moves(inst, grid, start);
        std::vector<std::future<std::optional<std::vector<Move>>>> futures;
        for (int w = 0; w < threads; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w]() {
                std::optional<std::vector<Move>> best;
                for (size_t fi = static_cast<size_t>(w); fi < firsts.size();
                     fi += static_cast<size_t>(threads)) {
                    const FirstMove& fm = firsts[fi];
                    std::vector<Rect> pos = start;
                    Rational cur = fm.dir < 2 ? pos[fm.robot].cx : pos[fm.robot].cy;
                    Rational amp = abs(fm.dest - cur);
                    Vec2 disp = kDirs[fm.dir] * amp;
                    bool blocked = false;
                    for (size_t o = 0; o < inst.k() && !blocked; ++o)
                        if (o != fm.robot && serial_collision(pos[fm.robot], disp, pos[o]))
                            blocked = true;
                    if (blocked) continue;
                    pos[fm.robot] = translate(pos[fm.robot], disp);
                    std::vector<Move> path{{fm.robot, kDirs[fm.dir], amp}};
                    SearchContext ctx{&inst, &grid, limit, {}};
                    if (dfs(ctx, pos, 1, path)) {
                        best = std::move(path);
                        break;
                    }
                }
                return best;
            }));
        }
        // Futures are striped over first-move indices; merge by replaying the
        // canonical order.
        std::vector<std::optional<std::vector<Move>>> results;
        for (auto& f : futures) results.push_back(f.get());
        std::optional<std::vector<Move>> winner;
        size_t winner_index = firsts.size();
        for (int w = 0; w < threads; ++w) {
            if (!results[w]) continue;
            // Recover this worker's first-move index.
            const Move& m0 = (*results[w])[0];
            for (size_t fi = static_cast<size_t>(w); fi < firsts.size();
                 fi += static_cast<size_t>(threads)) {
                const FirstMove& fm = firsts[fi];
                Rational cur = fm.dir < 2 ? start[fm.robot].cx : start[fm.robot].cy;
                if (fm.robot == m0.robot && kDirs[fm.dir] == m0.dir &&
                    abs(fm.dest - cur) == m0.amp) {
                    if (fi < winner_index) {
                        winner_index = fi;
                        winner = results[w];
                    }
                    break;
                }
            }
        }
        if (winner) return Schedule::serial(std::move(*winner));
    }
    return std::nullopt;
}

}  // namespace rectplan
