#include "rectplan/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "rectplan/error.hpp"
#include "rectplan/grid.hpp"

namespace rectplan {

namespace {

struct Lattice {
    long xmin, xmax, ymin, ymax;  // admissible integer centers
    size_t k;
    std::vector<std::pair<long, long>> goal;

    size_t span_x() const { return static_cast<size_t>(xmax - xmin + 1); }
    size_t span_y() const { return static_cast<size_t>(ymax - ymin + 1); }

    size_t encode(const std::vector<std::pair<long, long>>& state) const {
        size_t code = 0;
        for (const auto& [x, y] : state) {
            code = code * span_x() + static_cast<size_t>(x - xmin);
            code = code * span_y() + static_cast<size_t>(y - ymin);
        }
        return code;
    }
};

long to_checked_int(const Rational& q, const char* what) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        fail("NonLatticeInstance", std::string(what) + " is not a small integer");
    return q.get_num().get_si();
}

Lattice make_lattice(const Instance& inst, const Rect& window) {
    Lattice lat;
    lat.k = inst.k();
    if (!inst.dirs.is_axis_aligned())
        fail("NonLatticeInstance", "oracle needs the axis-aligned direction set");
    for (const RobotSpec& r : inst.robots) {
        if (r.start.w != 1 || r.start.h != 1)
            fail("NonLatticeInstance", "oracle needs unit-square robots");
        to_checked_int(r.start.cx, "start center");
        to_checked_int(r.start.cy, "start center");
        lat.goal.push_back({to_checked_int(r.goal.cx, "goal center"),
                            to_checked_int(r.goal.cy, "goal center")});
    }
    // Unit square centered at (x, y) fits in the window iff the center stays
    // half a unit inside each window edge.
    lat.xmin = to_checked_int(ceil_to_int(window.left() + Rational(1, 2)), "window edge");
    lat.xmax = to_checked_int(floor_to_int(window.right() - Rational(1, 2)), "window edge");
    lat.ymin = to_checked_int(ceil_to_int(window.bottom() + Rational(1, 2)), "window edge");
    lat.ymax = to_checked_int(floor_to_int(window.top() - Rational(1, 2)), "window edge");
    if (lat.xmin > lat.xmax || lat.ymin > lat.ymax)
        fail("NonLatticeInstance", "window holds no unit square");
    return lat;
}

Rect unit_square(long x, long y) {
    return Rect{Rational(x), Rational(y), Rational(1), Rational(1)};
}

const std::array<std::pair<long, long>, 4> kAxisSteps = {
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

Vec2 axis_vec(size_t d) {
    return Vec2(Rational(kAxisSteps[d].first), Rational(kAxisSteps[d].second));
}

bool in_window(const Lattice& lat, long x, long y) {
    return x >= lat.xmin && x <= lat.xmax && y >= lat.ymin && y <= lat.ymax;
}

}  // namespace

std::optional<long> bfs_serial(const Instance& inst, const Rect& window) {
    Lattice lat = make_lattice(inst, window);
    std::vector<std::pair<long, long>> start;
    for (const RobotSpec& r : inst.robots)
        start.push_back({to_checked_int(r.start.cx, "start"), to_checked_int(r.start.cy, "start")});
    for (const auto& [x, y] : start)
        if (!in_window(lat, x, y)) fail("NonLatticeInstance", "start outside the window");
    for (const auto& [x, y] : lat.goal)
        if (!in_window(lat, x, y)) return std::nullopt;

    if (start == lat.goal) return 0;

    std::unordered_set<size_t> seen{lat.encode(start)};
    std::deque<std::pair<std::vector<std::pair<long, long>>, long>> queue;
    queue.push_back({start, 0});

    while (!queue.empty()) {
        auto [state, depth] = std::move(queue.front());
        queue.pop_front();
        for (size_t r = 0; r < lat.k; ++r) {
            for (size_t d = 0; d < 4; ++d) {
                auto [dx, dy] = kAxisSteps[d];
                // Slide cell by cell; a longer slide is collision-free iff
                // every unit segment of it is.
                long x = state[r].first, y = state[r].second;
                for (long dist = 1;; ++dist) {
                    long nx = x + dx * dist, ny = y + dy * dist;
                    if (!in_window(lat, nx, ny)) break;
                    Rect at = unit_square(nx - dx, ny - dy);
                    bool blocked = false;
                    for (size_t o = 0; o < lat.k && !blocked; ++o)
                        if (o != r &&
                            serial_collision(at, axis_vec(d),
                                             unit_square(state[o].first, state[o].second)))
                            blocked = true;
                    if (blocked) break;

                    auto next = state;
                    next[r] = {nx, ny};
                    if (next == lat.goal) return depth + 1;
                    if (seen.insert(lat.encode(next)).second)
                        queue.push_back({std::move(next), depth + 1});
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<long> bfs_parallel(const Instance& inst, const Rect& window, size_t state_cap) {
    Lattice lat = make_lattice(inst, window);
    std::vector<std::pair<long, long>> start;
    for (const RobotSpec& r : inst.robots)
        start.push_back({to_checked_int(r.start.cx, "start"), to_checked_int(r.start.cy, "start")});
    for (const auto& [x, y] : start)
        if (!in_window(lat, x, y)) fail("NonLatticeInstance", "start outside the window");
    for (const auto& [x, y] : lat.goal)
        if (!in_window(lat, x, y)) return std::nullopt;

    if (start == lat.goal) return 0;

    struct Option {
        size_t dir;   // 0..3, or 4 for "stay"
        long dist;    // 0 for "stay"
    };

    std::unordered_set<size_t> seen{lat.encode(start)};
    std::deque<std::pair<std::vector<std::pair<long, long>>, long>> queue;
    queue.push_back({start, 0});
    std::optional<long> answer;

    while (!queue.empty() && !answer) {
        auto [state, depth] = std::move(queue.front());
        queue.pop_front();

        // Per-robot candidate moves limited only by the window; collision
        // legality depends on the rest of the joint choice and is checked
        // during assembly below.
        std::vector<std::vector<Option>> options(lat.k);
        for (size_t r = 0; r < lat.k; ++r) {
            options[r].push_back({4, 0});
            for (size_t d = 0; d < 4; ++d) {
                auto [dx, dy] = kAxisSteps[d];
                for (long dist = 1;; ++dist) {
                    if (!in_window(lat, state[r].first + dx * dist, state[r].second + dy * dist))
                        break;
                    options[r].push_back({d, dist});
                }
            }
        }

        std::vector<Option> chosen(lat.k, Option{4, 0});
        auto assemble = [&](auto&& self, size_t r) -> bool {
            if (answer) return true;
            if (r == lat.k) {
                bool any_move = false;
                for (const Option& o : chosen)
                    if (o.dir != 4) { any_move = true; break; }
                if (!any_move) return false;
                auto next = state;
                for (size_t i = 0; i < lat.k; ++i) {
                    if (chosen[i].dir == 4) continue;
                    next[i].first += kAxisSteps[chosen[i].dir].first * chosen[i].dist;
                    next[i].second += kAxisSteps[chosen[i].dir].second * chosen[i].dist;
                }
                if (next == lat.goal) {
                    answer = depth + 1;
                    return true;
                }
                if (seen.size() >= state_cap)
                    fail("StateSpaceExceeded", "parallel oracle state cap exceeded");
                if (seen.insert(lat.encode(next)).second)
                    queue.push_back({std::move(next), depth + 1});
                return false;
            }
            // Each (mover, stationary) and (mover, mover) pair is checked
            // when the later of the two robots gets its option assigned.
            for (const Option& o : options[r]) {
                chosen[r] = o;
                bool ok = true;
                Rect here = unit_square(state[r].first, state[r].second);
                for (size_t p = 0; p < r && ok; ++p) {
                    Rect there = unit_square(state[p].first, state[p].second);
                    if (o.dir != 4 && chosen[p].dir != 4) {
                        ok = !parallel_collision(there, axis_vec(chosen[p].dir),
                                                 Rational(chosen[p].dist), here, axis_vec(o.dir),
                                                 Rational(o.dist));
                    } else if (o.dir != 4) {
                        ok = !serial_collision(here, axis_vec(o.dir) * Rational(o.dist), there);
                    } else if (chosen[p].dir != 4) {
                        ok = !serial_collision(there,
                                               axis_vec(chosen[p].dir) * Rational(chosen[p].dist),
                                               here);
                    }
                }
                if (ok && self(self, r + 1)) return true;
            }
            return false;
        };
        assemble(assemble, 0);
    }
    return answer;
}

Rect default_window(const Instance& inst) {
    if (inst.box) return *inst.box;
    long four_k = 4 * static_cast<long>(inst.k());
    long depth = inst.budget ? std::min(*inst.budget, four_k) : four_k;
    Grid g = build_grid(inst, depth);
    Rational xlo = g.xs.front(), xhi = g.xs.back();
    Rational ylo = g.ys.front(), yhi = g.ys.back();
    // Expand to an integer-aligned rectangle whose admissible unit-square
    // centers cover every grid coordinate.
    mpz_class xl = floor_to_int(xlo), xh = ceil_to_int(xhi);
    mpz_class yl = floor_to_int(ylo), yh = ceil_to_int(yhi);
    Rational cx = (Rational(xl) + Rational(xh)) / 2;
    Rational cy = (Rational(yl) + Rational(yh)) / 2;
    Rational w = Rational(xh) - Rational(xl) + 1;
    Rational h = Rational(yh) - Rational(yl) + 1;
    return Rect{cx, cy, w, h};
}

}  // namespace rectplan
